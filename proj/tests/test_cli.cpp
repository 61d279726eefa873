#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "capax/capax.hpp"
#include "json.hpp"

using capax::ground_set;
using capax::mask_t;
using capax::rational;
using capax::set_function;
using nlohmann::json;

namespace {

struct cli_result {
    int code;
    std::string out;
    std::string err;
};

cli_result run_cli(const std::vector<std::string>& args) {
    std::ostringstream out, err;
    const int code = capax::cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

void write_text(const std::string& path, const std::string& text) {
    std::ofstream f(path);
    REQUIRE(f.good());
    f << text;
}

std::string read_text(const std::string& path) {
    std::ifstream f(path);
    REQUIRE(f.good());
    std::ostringstream buffer;
    buffer << f.rdbuf();
    return buffer.str();
}

/// Removes the scratch files a test case created.
struct scratch_files {
    std::vector<std::string> paths;
    std::string add(std::string path) {
        paths.push_back(path);
        return path;
    }
    ~scratch_files() {
        for (const auto& p : paths)
            std::remove(p.c_str());
    }
};

}  // namespace

TEST_CASE("cli bounds prints the exact table as CSV") {
    const auto r = run_cli({"bounds", "--max-a", "12", "--format", "csv"});
    CHECK(r.code == 0);
    CHECK(r.out ==
          "a,upper,lower\n"
          "1,1,0\n"
          "2,1,-1\n"
          "3,1,-2\n"
          "4,3,-3\n"
          "5,6,-4\n"
          "6,10,-10\n"
          "7,15,-20\n"
          "8,35,-35\n"
          "9,70,-56\n"
          "10,126,-126\n"
          "11,210,-252\n"
          "12,462,-462\n");
}

TEST_CASE("cli bounds prints JSON rows") {
    const auto r = run_cli({"bounds", "--max-a", "5"});
    REQUIRE(r.code == 0);
    const json rows = json::parse(r.out);
    REQUIRE(rows.size() == 5);
    CHECK(rows[0] == json({{"a", 1}, {"upper", 1}, {"lower", 0}}));
    CHECK(rows[4] == json({{"a", 5}, {"upper", 6}, {"lower", -4}}));
}

TEST_CASE("cli vertex-table prints coefficients with extreme markers") {
    const auto r = run_cli({"vertex-table", "--max-n", "12", "--format", "csv"});
    REQUIRE(r.code == 0);
    std::istringstream lines(r.out);
    std::vector<std::string> row;
    for (std::string line; std::getline(lines, line);)
        row.push_back(line);
    REQUIRE(row.size() == 13);
    CHECK(row[0] == "n,k0,k1,k2,k3,k4,k5,k6,k7,k8,k9,k10,k11,max_at,min_at");
    // A single element leaves no odd cardinality below n, so min_at is blank.
    CHECK(row[1] == "1,1,,,,,,,,,,,,0,");
    CHECK(row[2] == "2,1,-1,,,,,,,,,,,0,1");
    CHECK(row[12] == "12,1,-11,55,-165,330,-462,462,-330,165,-55,11,-1,6,5");

    const auto j = run_cli({"vertex-table", "--max-n", "12", "--format", "json"});
    REQUIRE(j.code == 0);
    const json rows = json::parse(j.out);
    REQUIRE(rows.size() == 12);
    CHECK(rows[0]["minAt"].is_null());
    CHECK(rows[11]["values"] ==
          json::array({1, -11, 55, -165, 330, -462, 462, -330, 165, -55, 11, -1}));
    CHECK(rows[11]["maxAt"] == 6);
    CHECK(rows[11]["minAt"] == 5);
}

TEST_CASE("cli extremal writes the closed-form capacities") {
    scratch_files tmp;
    const auto out_path = tmp.add("cli_extremal_upper.json");
    const auto r = run_cli({"extremal", "--set", "1,2,3,4", "--n", "4",
                            "--which", "upper", "--out", out_path});
    REQUIRE(r.code == 0);
    const ground_set g4(4);
    const auto expected = capax::any_set_function(capax::extremal_upper(0b1111u, g4));
    CHECK(read_text(out_path) == capax::serialize_document(expected));

    const auto sym_path = tmp.add("cli_extremal_sym_lower.json");
    REQUIRE(run_cli({"extremal", "--set", "1,2,3,4", "--n", "5",
                     "--which", "sym-lower", "--out", sym_path})
                .code == 0);
    const ground_set g5(5);
    const auto sym = capax::any_set_function(capax::symmetric_extremal_lower(0b01111u, g5));
    CHECK(read_text(sym_path) == capax::serialize_document(sym));

    const auto loaded = capax::load_document_file(sym_path);
    CHECK(std::get<set_function<rational>>(loaded) ==
          capax::symmetric_extremal_lower(0b01111u, g5));
}

TEST_CASE("cli transform applies the requested kernel") {
    scratch_files tmp;
    const auto in_path = tmp.add("cli_transform_in.json");
    const auto out_path = tmp.add("cli_transform_out.json");
    write_text(in_path, R"({
        "n": 2,
        "scalarMode": "rational",
        "encoding": "dense",
        "values": ["0", "0", "0", "1"]
    })");
    const auto r = run_cli({"transform", "--kind", "mobius", "--in", in_path,
                            "--out", out_path, "--check-naive"});
    REQUIRE(r.code == 0);
    const json doc = json::parse(read_text(out_path));
    CHECK(doc["values"] == json::array({"0", "0", "0", "1"}));

    // Möbius then zeta reproduces the canonical form of the input byte for byte.
    const auto back_path = tmp.add("cli_transform_back.json");
    REQUIRE(run_cli({"transform", "--kind", "zeta", "--in", out_path,
                     "--out", back_path, "--check-naive"})
                .code == 0);
    const auto canonical = capax::serialize_document(capax::load_document_file(in_path));
    CHECK(read_text(back_path) == canonical);
}

TEST_CASE("cli transform treats dense and sparse inputs identically") {
    scratch_files tmp;
    const auto dense_path = tmp.add("cli_enc_dense.json");
    const auto sparse_path = tmp.add("cli_enc_sparse.json");
    write_text(dense_path, R"({
        "n": 3,
        "scalarMode": "rational",
        "encoding": "dense",
        "values": ["0", "1/2", "0", "1/2", "0", "1/2", "1/2", "1"]
    })");
    write_text(sparse_path, R"({
        "n": 3,
        "scalarMode": "rational",
        "encoding": "sparse",
        "values": {"1": "1/2", "1,2": "1/2", "1,3": "1/2", "2,3": "1/2", "1,2,3": "1"}
    })");
    const auto dense_out = tmp.add("cli_enc_dense_out.json");
    const auto sparse_out = tmp.add("cli_enc_sparse_out.json");
    REQUIRE(run_cli({"transform", "--kind", "interaction", "--in", dense_path,
                     "--out", dense_out, "--check-naive"})
                .code == 0);
    REQUIRE(run_cli({"transform", "--kind", "banzhaf", "--in", sparse_path,
                     "--out", sparse_out})
                .code == 0);
    const json banzhaf = json::parse(read_text(sparse_out));
    CHECK(banzhaf["scalarMode"] == "rational");
    REQUIRE(run_cli({"transform", "--kind", "banzhaf", "--in", dense_path,
                     "--out", dense_out})
                .code == 0);
    CHECK(read_text(dense_out) == read_text(sparse_out));
}

TEST_CASE("cli transform rejects the literal-sum check beyond its size cap") {
    scratch_files tmp;
    const auto in_path = tmp.add("cli_naive_cap.json");
    const ground_set g13(13);
    set_function<double> flat(g13);
    for (mask_t m = 0; m <= g13.full(); ++m)
        flat[m] = double(capax::popcount(m)) / 13.0;
    capax::save_document_file(in_path, capax::any_set_function(flat));

    const auto out_path = tmp.add("cli_naive_cap_out.json");
    // Without the cross-check the size is fine...
    CHECK(run_cli({"transform", "--kind", "mobius", "--in", in_path,
                   "--out", out_path})
              .code == 0);
    // ...but the literal sum is quadratic and refuses to run at this size.
    const auto r = run_cli({"transform", "--kind", "mobius", "--in", in_path,
                            "--out", out_path, "--check-naive"});
    CHECK(r.code == 2);
    CHECK(r.err.find("error:") != std::string::npos);
}

TEST_CASE("cli verify confirms the bounds over all vertices") {
    const auto r = run_cli({"verify", "--n", "4", "--target", "mobius",
                            "--set", "1,2,3,4"});
    REQUIRE(r.code == 0);
    const json doc = json::parse(r.out);
    CHECK(doc["n"] == 4);
    CHECK(doc["target"] == "mobius");
    CHECK(doc["vertices"] == 166);
    CHECK(doc["allOk"] == true);
    REQUIRE(doc["results"].size() == 1);
    const json& row = doc["results"][0];
    CHECK(row["set"] == "1,2,3,4");
    CHECK(row["size"] == 4);
    CHECK(row["max"] == "3");
    CHECK(row["min"] == "-3");
    CHECK(row["expectedUpper"] == 3);
    CHECK(row["expectedLower"] == -3);
    CHECK(row["ok"] == true);

    const auto all = run_cli({"verify", "--n", "3", "--target", "banzhaf"});
    REQUIRE(all.code == 0);
    const json every = json::parse(all.out);
    CHECK(every["vertices"] == 18);
    CHECK(every["results"].size() == 7);
    CHECK(every["allOk"] == true);

    CHECK(run_cli({"verify", "--n", "7"}).code == 2);
}

TEST_CASE("cli verify succeeds for every transform and ground size up to five") {
    for (const std::string target : {"mobius", "interaction", "banzhaf"})
        for (int n = 1; n <= 5; ++n)
            CHECK(run_cli({"verify", "--n", std::to_string(n), "--target", target})
                      .code == 0);
}

TEST_CASE("cli check reports validity and structure") {
    scratch_files tmp;
    const auto additive_path = tmp.add("cli_check_additive.json");
    write_text(additive_path, R"({
        "n": 3,
        "scalarMode": "rational",
        "encoding": "dense",
        "values": ["0", "1/6", "2/6", "3/6", "3/6", "4/6", "5/6", "1"]
    })");

    const auto ok = run_cli({"check", "--in", additive_path});
    REQUIRE(ok.code == 0);
    const json report = json::parse(ok.out);
    CHECK(report["valid"] == true);
    CHECK(report["grounded"] == true);
    CHECK(report["monotone"] == true);
    CHECK(report["normalized"] == true);
    CHECK(report["monotonicityWitness"].is_null());
    CHECK(report["minimalAdditivity"] == 1);

    const auto k1 = run_cli({"check", "--in", additive_path, "--k-additive", "1"});
    CHECK(k1.code == 0);
    CHECK(json::parse(k1.out)["kAdditive"] == json({{"k", 1}, {"holds", true}}));

    const auto basis = run_cli({"check", "--in", additive_path, "--basis"});
    CHECK(basis.code == 0);
    CHECK(json::parse(basis.out)["basis"] == "1/2/3");

    const auto incompatible =
        run_cli({"check", "--in", additive_path, "--partition", "1,2/3"});
    CHECK(incompatible.code == 1);
    const json pr = json::parse(incompatible.out);
    CHECK(pr["partition"] == json({{"spec", "1,2/3"}, {"compatible", false}}));

    CHECK(run_cli({"check", "--in", additive_path, "--partition", "1,2/2,3"}).code == 2);
}

TEST_CASE("cli check flags a monotonicity violation with a witness") {
    scratch_files tmp;
    const auto path = tmp.add("cli_check_violation.json");
    write_text(path, R"({
        "n": 2,
        "scalarMode": "float",
        "encoding": "dense",
        "values": [0, 0.7, 0, 0.5]
    })");
    const auto r = run_cli({"check", "--in", path, "--basis"});
    CHECK(r.code == 1);
    const json report = json::parse(r.out);
    CHECK(report["valid"] == false);
    CHECK(report["monotone"] == false);
    CHECK(report["monotonicityWitness"] ==
          json({{"set", "1"}, {"superset", "1,2"}}));
    CHECK(report["basis"].is_null());
}

TEST_CASE("cli check accepts a compatible partition of a symmetric capacity") {
    scratch_files tmp;
    const auto path = tmp.add("cli_check_symmetric.json");
    const ground_set g3(3);
    capax::save_document_file(
        path, capax::any_set_function(capax::symmetric_vertex<rational>(1, g3)));
    const auto r = run_cli({"check", "--in", path, "--partition", "1,2/3", "--basis"});
    CHECK(r.code == 0);
    const json report = json::parse(r.out);
    CHECK(report["partition"] == json({{"spec", "1,2/3"}, {"compatible", true}}));
    CHECK(report["basis"] == "1,2,3");
}

TEST_CASE("cli cover replaces a set function by its monotonic cover") {
    scratch_files tmp;
    const auto in_path = tmp.add("cli_cover_in.json");
    const auto out_path = tmp.add("cli_cover_out.json");
    write_text(in_path, R"({
        "n": 2,
        "scalarMode": "float",
        "encoding": "dense",
        "values": [0, 0.7, 0, 0.5]
    })");
    REQUIRE(run_cli({"cover", "--in", in_path, "--out", out_path}).code == 0);
    const json doc = json::parse(read_text(out_path));
    CHECK(doc["values"] == json::array({0.0, 0.7, 0.0, 0.7}));
}

TEST_CASE("cli asymptote compares the exact magnitude to its estimate") {
    const auto r = run_cli({"asymptote", "--max-n", "12", "--format", "csv"});
    REQUIRE(r.code == 0);
    std::istringstream lines(r.out);
    std::string header;
    REQUIRE(std::getline(lines, header));
    CHECK(header == "n,exact,estimate");
    int n;
    long long exact;
    double estimate;
    char comma;
    std::vector<std::string> rows;
    for (std::string line; std::getline(lines, line);)
        rows.push_back(line);
    REQUIRE(rows.size() == 11);  // n = 2..12
    {
        std::istringstream first(rows.front());
        first >> n >> comma >> exact >> comma >> estimate;
        CHECK(n == 2);
        CHECK(exact == 1);
        CHECK(estimate == Catch::Approx(2.256758334191025));
    }
    {
        std::istringstream last(rows.back());
        last >> n >> comma >> exact >> comma >> estimate;
        CHECK(n == 12);
        CHECK(exact == 462);
        CHECK(estimate == Catch::Approx(943.4293574897268));
    }

    const auto j = run_cli({"asymptote", "--max-n", "3"});
    REQUIRE(j.code == 0);
    const json doc = json::parse(j.out);
    REQUIRE(doc.size() == 2);
    CHECK(doc[1]["n"] == 3);
    CHECK(doc[1]["exact"] == 1);
    CHECK(doc[1]["estimate"].get<double>() ==
          Catch::Approx(std::pow(4.0, 1.5) / std::sqrt(4.71238898038469)));

    CHECK(run_cli({"asymptote", "--max-n", "1"}).code == 2);
}

TEST_CASE("cli reports input errors with exit status 2") {
    scratch_files tmp;
    CHECK(run_cli({"transform", "--kind", "mobius", "--in", "missing_file.json",
                   "--out", "unused.json"})
              .code == 2);

    const auto bad_doc = tmp.add("cli_bad_doc.json");
    write_text(bad_doc, R"({"n": 1, "scalarMode": "rational", "encoding": "dense",
                            "values": ["0"]})");
    const auto r = run_cli({"check", "--in", bad_doc});
    CHECK(r.code == 2);
    CHECK(r.err.find("values") != std::string::npos);

    CHECK(run_cli({"bounds", "--max-a", "12", "--format", "yaml"}).code == 2);
    CHECK(run_cli({"bounds"}).code == 2);
    CHECK(run_cli({"extremal", "--set", "9", "--n", "3", "--which", "upper",
                   "--out", "unused.json"})
              .code == 2);
    CHECK(run_cli({"extremal", "--set", "1", "--n", "99", "--which", "upper",
                   "--out", "unused.json"})
              .code == 2);
    CHECK(run_cli({"nonsense"}).code == 2);
    CHECK(run_cli({}).code == 2);
}

TEST_CASE("cli help exits cleanly") {
    const auto r = run_cli({"--help"});
    CHECK(r.code == 0);
    CHECK(r.out.find("bounds") != std::string::npos);
    CHECK(r.out.find("verify") != std::string::npos);
}
