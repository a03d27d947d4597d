#include <doctest.h>

#include <map>

#include "liedual/catalog.hpp"
#include "liedual/classification.hpp"
#include "liedual/commands.hpp"

using namespace liedual;

namespace {

struct Files {
  std::map<std::string, std::string> files;
  FileReader reader() const {
    return [this](const std::string& p) {
      auto it = files.find(p);
      if (it == files.end()) throw Error(ErrorCode::IoError, "cannot open file", p);
      return it->second;
    };
  }
  CommandResult run(const std::string& cmd, std::vector<std::string> args, CommandOptions o = {}) const {
    return run_command(cmd, args, o, reader());
  }
};

std::string export_doc(const std::string& name, std::vector<std::string> args) {
  CommandResult r = run_command("catalog", [&] {
    std::vector<std::string> a{name};
    a.insert(a.end(), args.begin(), args.end());
    return a;
  }(), {});
  REQUIRE(r.status == 0);
  return r.out;
}

}  // namespace

TEST_SUITE("commands") {
  TEST_CASE("classify reports the characteristic polynomial") {
    Files f;
    f.files["nw.json"] = export_doc("nappi-witten", {"3", "1"});
    CommandResult r = f.run("classify", {"nw.json"});
    CHECK(r.status == 0);
    CHECK(r.out.find("char_poly: t^4 + 10t^2 + 9\n") != std::string::npos);
    CHECK(r.out.find("mu: 3 1\n") != std::string::npos);
    CommandOptions o;
    o.json = true;
    o.numeric = true;
    CommandResult j = f.run("classify", {"nw.json"}, o);
    auto rec = nlohmann::json::parse(j.out);
    CHECK(rec["char_poly"] == "t^4 + 10t^2 + 9");
    CHECK(rec["mu_numeric"][0].get<double>() == doctest::Approx(3).epsilon(1e-12));
  }

  TEST_CASE("catalog exports") {
    AlgebraDocument d = parse_algebra_document(export_doc("carroll", {"3"}));
    CHECK(d.algebra.same_structure(carroll_algebra(3)));
    CHECK(d.algebra == carroll_algebra(3));
    CommandResult list = run_command("catalog", {}, {});
    CHECK(list.status == 0);
    CHECK(list.out.find("carroll") != std::string::npos);
    CommandResult bad = run_command("catalog", {"carroll"}, {});
    CHECK(bad.status != 0);
    CHECK(bad.err.find("error[InvalidSpec]") == 0);
  }

  TEST_CASE("carroll-dual of heisenberg") {
    Files f;
    f.files["h.json"] = export_doc("heisenberg", {"1"});
    CommandResult r = f.run("carroll-dual", {"h.json"});
    REQUIRE(r.status == 0);
    AlgebraDocument g = parse_algebra_document(r.out);
    CHECK(g.algebra.dim() == 3);
    CHECK(std::holds_alternative<GalileanStructure>(*g.structure));
    CHECK(derived_subalgebra(g.algebra).dim() == 2);
    f.files["g.json"] = r.out;
    CHECK(f.run("check", {"g.json"}).status == 0);
    CommandResult back = f.run("galilei-dual", {"g.json"});
    REQUIRE(back.status == 0);
    CHECK(parse_algebra_document(back.out).algebra.same_structure(heisenberg(symplectic_blocks({1}))));
  }

  TEST_CASE("double-extend, reduce and derivations") {
    Files f;
    f.files["base.json"] = export_doc("reductive", {"1", "2", "1"});
    Matrix d(5, 5);
    d(3, 4) = -2;
    d(4, 3) = 2;
    f.files["d.json"] = matrix_to_json(d).dump();
    CommandOptions o;
    o.derivation_file = "d.json";
    CommandResult e = f.run("double-extend", {"base.json"}, o);
    REQUIRE(e.status == 0);
    f.files["e.json"] = e.out;
    CHECK(f.run("check", {"e.json"}).status == 0);
    CommandResult red = f.run("reduce", {"e.json"});
    REQUIRE(red.status == 0);
    AlgebraDocument data = parse_algebra_document(red.out);
    CHECK(data.derivation == d);
    f.files["data.json"] = red.out;
    CHECK(f.run("check", {"data.json"}).status == 0);
    CommandResult cls = f.run("classify", {"e.json"});
    CHECK(cls.out.find("semisimple: (3, 1)") != std::string::npos);
    CHECK(cls.out.find("mu: 2") != std::string::npos);

    CommandOptions s;
    s.skew = true;
    s.json = true;
    CommandResult der = f.run("derivations", {"base.json"}, s);
    REQUIRE(der.status == 0);
    CHECK(nlohmann::json::parse(der.out)["space_dim"] == 4);
    s.form_file = "missing.json";
    CommandResult io = f.run("derivations", {"base.json"}, s);
    CHECK(io.status != 0);
    CHECK(nlohmann::json::parse(io.err)["error"]["code"] == "IoError");
  }

  TEST_CASE("check rejects bad attachments") {
    Files f;
    f.files["bad.json"] = R"({"dim": 2, "derivation": [["1", "0"], ["0", "1"]],
      "brackets": [{"x": 0, "y": 1, "terms": [[1, "1"]]}]})";
    CommandResult r = f.run("check", {"bad.json"});
    CHECK(r.status == 1);
    CHECK(r.err.find("error[NotADerivation] at /derivation") == 0);
    f.files["form.json"] = R"({"dim": 3, "form": [["1","0","0"],["0","1","0"],["0","0","1"]],
      "brackets": [{"x": 0, "y": 1, "terms": [[2, "1"]]}]})";
    CHECK(f.run("check", {"form.json"}).err.find("error[InvalidData] at /form") == 0);
  }

  TEST_CASE("invariant-forms and leibniz-decompose") {
    Files f;
    f.files["l.json"] = export_doc("leibniz", {"0", "1", "1"});
    CommandOptions o;
    o.json = true;
    auto fam = nlohmann::json::parse(f.run("invariant-forms", {"l.json"}, o).out);
    CHECK(fam["nondegenerate"].is_null());
    auto dec = nlohmann::json::parse(f.run("leibniz-decompose", {"l.json"}, o).out);
    CHECK(dec["same_char_poly"] == false);
    CHECK(dec["invariant_metric"].is_null());
    f.files["l1.json"] = export_doc("leibniz", {"1", "1", "1"});
    auto dec1 = nlohmann::json::parse(f.run("leibniz-decompose", {"l1.json"}, o).out);
    CHECK(dec1["bargmannian"].size() >= 1);
  }

  TEST_CASE("malformed input never escapes as an exception") {
    Files f;
    f.files["junk"] = "{\"dim\": 3, \"brackets\": [{\"x\": 0";
    f.files["big"] = R"({"dim": 100})";
    for (const char* cmd : {"check", "invariant-forms", "derivations", "reduce", "carroll-dual", "galilei-dual",
                            "classify", "leibniz-decompose"}) {
      CHECK(f.run(cmd, {"junk"}).status == 1);
      CHECK(f.run(cmd, {"big"}).err.find("LimitExceeded") != std::string::npos);
      CHECK(f.run(cmd, {"absent"}).err.find("IoError") != std::string::npos);
      CHECK(f.run(cmd, {}).status == 2);
    }
    CHECK(f.run("frobnicate", {}).err.find("UnknownCommand") != std::string::npos);
    CommandOptions o;
    CHECK(f.run("double-extend", {"junk"}, o).status == 2);
  }

  TEST_CASE("structure searches fail cleanly") {
    Files f;
    f.files["c.json"] = export_doc("carroll", {"2"});
    CommandResult r = f.run("carroll-dual", {"c.json"});
    CHECK(r.status == 1);
    CHECK(r.err.find("StructureInvalid") != std::string::npos);
  }
}
