#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <string>
#include <unistd.h>
#include <vector>

#include <json.hpp>

#include "lcsx/gen.hpp"
#include "lcsx/io.hpp"
#include "lcsx/oracle.hpp"
#include "lcsx/seq.hpp"

using namespace lcsx;

namespace {

struct temp_dir {
    std::filesystem::path path;
    temp_dir() {
        path = std::filesystem::temp_directory_path() /
               ("lcsx_test_" + std::to_string(::getpid()) + "_" + std::to_string(counter()++));
        std::filesystem::create_directories(path);
    }
    ~temp_dir() { std::filesystem::remove_all(path); }
    std::string file(const std::string& name) const { return (path / name).string(); }
    static int& counter() {
        static int c = 0;
        return c;
    }
};

}  // namespace

TEST_CASE("generation is deterministic per spec") {
    instance_spec spec;
    spec.kind = instance_kind::uniform;
    spec.n_x = 64;
    spec.n_y = 80;
    spec.alphabet = 7;
    spec.seed = 123;
    instance a = generate(spec), b = generate(spec);
    CHECK(a.x == b.x);
    CHECK(a.y == b.y);
    CHECK(a.x.size() == 64);
    CHECK(a.y.size() == 80);
    for (auto v : a.x) CHECK(v < 7);

    spec.seed = 124;
    CHECK(generate(spec).x != a.x);
}

TEST_CASE("unary alphabet pins the LCS") {
    instance_spec spec;
    spec.kind = instance_kind::uniform;
    spec.n_x = 10;
    spec.n_y = 4;
    spec.alphabet = 1;
    spec.seed = 5;
    instance inst = generate(spec);
    CHECK(inst.lcs_lower_bound == 4);
    CHECK(inst.x == std::vector<std::uint32_t>(10, 0));
}

TEST_CASE("planted instances embed a shared subsequence") {
    instance_spec spec;
    spec.kind = instance_kind::planted;
    spec.n_x = 120;
    spec.n_y = 90;
    spec.alphabet = 12;
    spec.planted_len = 40;
    spec.seed = 99;
    instance inst = generate(spec);
    CHECK(inst.lcs_lower_bound == 40);
    std::size_t exact =
        lcs_exact(fresh_sequence(inst.x), fresh_sequence(inst.y)).length;
    CHECK(exact >= 40);

    spec.planted_len = 91;  // larger than n_y
    CHECK_THROWS_AS(generate(spec), std::invalid_argument);
}

TEST_CASE("adversarial instance is an identity against its reverse") {
    instance_spec spec;
    spec.kind = instance_kind::adversarial_decreasing;
    spec.n_x = 6;
    spec.seed = 1;
    instance inst = generate(spec);
    CHECK(inst.x == std::vector<std::uint32_t>{0, 1, 2, 3, 4, 5});
    CHECK(inst.y == std::vector<std::uint32_t>{5, 4, 3, 2, 1, 0});
}

TEST_CASE("block_repeat runs are bounded") {
    instance_spec spec;
    spec.kind = instance_kind::block_repeat;
    spec.n_x = 200;
    spec.n_y = 100;
    spec.alphabet = 10;
    spec.seed = 17;
    instance inst = generate(spec);
    CHECK(inst.x.size() == 200);
    std::size_t run_max = 200 / 10;
    std::size_t run = 1;
    for (std::size_t i = 1; i < inst.x.size(); ++i) {
        run = inst.x[i] == inst.x[i - 1] ? run + 1 : 1;
        REQUIRE(run <= run_max);
    }
}

TEST_CASE("invalid specs are rejected") {
    instance_spec spec;
    spec.kind = instance_kind::uniform;
    spec.n_x = 4;
    spec.n_y = 4;
    spec.alphabet = 0;
    CHECK_THROWS_AS(generate(spec), std::invalid_argument);

    CHECK(kind_from_name("planted") == instance_kind::planted);
    CHECK(std::string(kind_name(instance_kind::block_repeat)) == "block_repeat");
    CHECK_THROWS_AS(kind_from_name("nope"), std::invalid_argument);
}

TEST_CASE("token files round-trip, including multibyte tokens") {
    temp_dir dir;
    std::vector<std::string> tokens{"alpha", "βeta", "alpha", "42"};
    write_tokens_file(dir.file("t.txt"), tokens);
    CHECK(read_tokens_file(dir.file("t.txt")) == tokens);
    CHECK_THROWS_AS(read_tokens_file(dir.file("missing.txt")), io_error);
}

TEST_CASE("u32 files round-trip and report parse errors with line numbers") {
    temp_dir dir;
    std::vector<std::uint32_t> values{0, 4294967295u, 7};
    write_u32_file(dir.file("v.u32"), values);
    CHECK(read_u32_file(dir.file("v.u32")) == values);

    {
        std::ofstream out(dir.file("bad.u32"));
        out << "12\n\nnot_a_number\n";
    }
    try {
        read_u32_file(dir.file("bad.u32"));
        FAIL("expected parse_error");
    } catch (const parse_error& e) {
        CHECK(e.line == 3);
        CHECK(std::string(e.what()).find("line 3") != std::string::npos);
    }

    {
        std::ofstream out(dir.file("huge.u32"));
        out << "4294967296\n";  // one past the u32 range
    }
    CHECK_THROWS_AS(read_u32_file(dir.file("huge.u32")), parse_error);
}

TEST_CASE("load_pair interns both files into one id space") {
    temp_dir dir;
    write_tokens_file(dir.file("x.txt"), {"cat", "dog", "cat"});
    write_tokens_file(dir.file("y.txt"), {"dog", "cat"});
    loaded_pair pair = load_pair(dir.file("x.txt"), dir.file("y.txt"), token_format::tokens);
    CHECK(pair.x.symbols == std::vector<symbol_id>{0, 1, 0});
    CHECK(pair.y.symbols == std::vector<symbol_id>{1, 0});
    CHECK(pair.vocabulary == std::vector<std::string>{"cat", "dog"});
}

TEST_CASE("file digests are stable and content-sensitive") {
    temp_dir dir;
    write_tokens_file(dir.file("a.txt"), {"x", "y"});
    write_tokens_file(dir.file("b.txt"), {"x", "y"});
    write_tokens_file(dir.file("c.txt"), {"x", "z"});
    std::string da = file_digest(dir.file("a.txt"));
    CHECK(da.size() == 16);
    CHECK(da == file_digest(dir.file("b.txt")));
    CHECK(da != file_digest(dir.file("c.txt")));
}

TEST_CASE("run records serialize with fixed field names") {
    run_record rec;
    rec.file_x = "x.txt";
    rec.file_y = "y.txt";
    rec.digest_x = "0123456789abcdef";
    rec.digest_y = "fedcba9876543210";
    rec.algorithm = "better";
    rec.alds = "exact";
    rec.len_x = 3;
    rec.len_y = 2;
    rec.n = 5;
    rec.output_len = 2;
    rec.bound_4n45 = ratio_bound_4n45(5);
    rec.bound_n34log = ratio_bound_n34log(5);
    rec.witness.symbols = {0, 1};
    rec.witness.idx_x = {0, 1};
    rec.witness.idx_y = {0, 1};
    rec.witness_tokens = {"a", "b"};
    pass_trace pass;
    pass.band_lo = 1;
    pass.x_len = 3;
    pass.best_match_len = 1;
    pass.lis_pi_len = 2;
    pass.best_len = 2;
    pass.iterations.push_back({2, 2, 3});
    rec.passes.push_back(pass);

    nlohmann::json j = nlohmann::json::parse(run_record_to_json(rec));
    CHECK(j["instance"]["file_x"] == "x.txt");
    CHECK(j["instance"]["digest_y"] == "fedcba9876543210");
    CHECK(j["algorithm"] == "better");
    CHECK(j["alds"] == "exact");
    CHECK(j["n"] == 5);
    CHECK(j["output_len"] == 2);
    CHECK_FALSE(j.contains("exact_len"));  // not computed in this record
    CHECK_FALSE(j.contains("ratio"));
    CHECK(j["bound_4n45"].get<double>() == doctest::Approx(ratio_bound_4n45(5)));
    CHECK(j["bound_n34log"].get<double>() == doctest::Approx(ratio_bound_n34log(5)));
    CHECK(j["passes"].size() == 1);
    CHECK(j["passes"][0]["f"] == 1);
    CHECK(j["passes"][0]["iterations"][0]["deleted"] == 3);
    CHECK(j["witness"]["tokens"] == std::vector<std::string>{"a", "b"});
    CHECK(j["witness"]["idx_x"] == std::vector<int>{0, 1});

    rec.exact_len = 3;
    rec.ratio = 1.5;
    nlohmann::json j2 = nlohmann::json::parse(run_record_to_json(rec));
    CHECK(j2["exact_len"] == 3);
    CHECK(j2["ratio"].get<double>() == doctest::Approx(1.5));

    temp_dir dir;
    write_run_record(dir.file("rec.json"), rec);
    std::ifstream in(dir.file("rec.json"));
    nlohmann::json j3 = nlohmann::json::parse(in);
    CHECK(j3["output_len"] == 2);
}
