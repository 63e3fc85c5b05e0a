#define DOCTEST_CONFIG_IMPLEMENT
#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <string>

#include "digon/io.hpp"

namespace {

std::string g_binary;
std::filesystem::path g_dir;

struct RunResult {
    int exit_code;
    std::string stdout_text;
};

RunResult run(const std::string& args) {
    const auto out_path = g_dir / "stdout.txt";
    const std::string cmd = g_binary + " " + args + " > " + out_path.string() + " 2>/dev/null";
    const int status = std::system(cmd.c_str());
    RunResult result;
    result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    result.stdout_text = digon::read_file(out_path.string());
    return result;
}

std::string path_of(const std::string& name) { return (g_dir / name).string(); }

}  // namespace

TEST_CASE("digons: census, bounds and exit codes") {
    digon::write_file(path_of("pair.json"),
                      R"({"circles":[{"x":0,"y":0,"r":1},{"x":1,"y":0,"r":1}]})");
    const auto pair = run("digons " + path_of("pair.json"));
    CHECK(pair.exit_code == 0);
    const auto j = nlohmann::json::parse(pair.stdout_text);
    CHECK(j["census"]["digons"] == 3);
    CHECK(j["census"]["bounds_applicable"] == false);

    digon::write_file(path_of("tangent.json"),
                      R"({"circles":[{"x":0,"y":0,"r":1},{"x":2,"y":0,"r":1}]})");
    CHECK(run("digons " + path_of("tangent.json")).exit_code == 2);

    digon::write_file(path_of("broken.json"), "{not json");
    CHECK(run("digons " + path_of("broken.json")).exit_code == 2);

    CHECK(run("digons " + path_of("missing.json")).exit_code == 2);
}

TEST_CASE("construct round-trips through digons with the same census") {
    const auto witness = path_of("tight5.json");
    const auto constructed = run("construct tight --n 5 -o " + witness);
    CHECK(constructed.exit_code == 0);
    const auto census_at_construct = nlohmann::json::parse(constructed.stdout_text);
    CHECK(census_at_construct["census"]["lenses"] == 8);

    const auto reread = run("digons " + witness);
    CHECK(reread.exit_code == 0);
    CHECK(nlohmann::json::parse(reread.stdout_text)["census"] ==
          census_at_construct["census"]);

    CHECK(run("construct tight --n 3 -o " + path_of("none.json")).exit_code == 2);
}

TEST_CASE("verify runs the full pipeline") {
    run("construct tight --n 5 -o " + path_of("tight5.json"));
    const auto good = run("verify " + path_of("tight5.json"));
    CHECK(good.exit_code == 0);
    const auto j = nlohmann::json::parse(good.stdout_text);
    CHECK(j["ok"] == true);
    CHECK(j["gprime"]["edges"] == 16);

    // A triple point aborts with a validation error.
    digon::write_file(
        path_of("triple.json"),
        R"({"circles":[{"x":0,"y":0,"r":1},{"x":1,"y":0,"r":1},{"x":0.5,"y":0,"r":0.8660254037844386}]})");
    CHECK(run("verify " + path_of("triple.json")).exit_code == 2);
}

TEST_CASE("verify output is byte-identical across runs") {
    run("construct tight --n 7 -o " + path_of("tight7.json"));
    const auto a = run("verify " + path_of("tight7.json"));
    const auto b = run("verify " + path_of("tight7.json"));
    CHECK(a.stdout_text == b.stdout_text);
}

TEST_CASE("fuzz: small campaigns and the empty campaign") {
    const auto small = run("fuzz --nmin 3 --nmax 5 --trials 40 --seed 7");
    CHECK(small.exit_code == 0);
    const auto j = nlohmann::json::parse(small.stdout_text);
    CHECK(j["violations"] == 0);
    CHECK(j["trials"] == 40);

    const auto unit = run("fuzz --nmin 3 --nmax 5 --trials 25 --seed 9 --unit");
    CHECK(unit.exit_code == 0);

    const auto empty = run("fuzz --trials 0 --seed 1");
    CHECK(empty.exit_code == 0);
    CHECK(nlohmann::json::parse(empty.stdout_text)["violations"] == 0);
}

TEST_CASE("invert preserves the census and rejects centers on curves") {
    run("construct tight --n 5 -o " + path_of("tight5.json"));
    const auto inverted = run("invert " + path_of("tight5.json") +
                              " --cx 40 --cy 3 --k 7 -o " + path_of("tight5inv.json"));
    CHECK(inverted.exit_code == 0);
    const auto j = nlohmann::json::parse(inverted.stdout_text);
    CHECK(j["census_match"] == true);
    CHECK(j["before"]["lenses"] == 8);
    CHECK(j["after"]["lenses"] == 8);

    // (1, 0) lies on the first unit circle of the pair file.
    digon::write_file(path_of("pair.json"),
                      R"({"circles":[{"x":0,"y":0,"r":1},{"x":1,"y":0,"r":1}]})");
    CHECK(run("invert " + path_of("pair.json") + " --cx 1 --cy 0 --k 1 -o " +
              path_of("pairinv.json"))
              .exit_code == 2);
}

TEST_CASE("render writes SVG with the requested layers") {
    run("construct tight --n 5 -o " + path_of("tight5.json"));
    const auto svg_path = path_of("tight5.svg");
    CHECK(run("render " + path_of("tight5.json") + " -o " + svg_path).exit_code == 0);
    const auto svg = digon::read_file(svg_path);
    CHECK(svg.find("<svg") != std::string::npos);
    CHECK(svg.find("<circle") != std::string::npos);
    CHECK(svg.find("<path") != std::string::npos);

    CHECK(run("render " + path_of("tight5.json") + " -o " + svg_path +
              " --layers circles")
              .exit_code == 0);
    CHECK(digon::read_file(svg_path).find("<path") == std::string::npos);

    CHECK(run("render " + path_of("tight5.json") + " -o " + svg_path +
              " --layers bogus")
              .exit_code == 2);
}

int main(int argc, char** argv) {
    if (argc < 2) {
        std::fprintf(stderr, "usage: test_cli <digons-binary>\n");
        return 1;
    }
    g_binary = argv[1];
    g_dir = std::filesystem::temp_directory_path() / "digons-cli-test";
    std::filesystem::create_directories(g_dir);

    doctest::Context context;
    context.applyCommandLine(1, argv);
    return context.run();
}
