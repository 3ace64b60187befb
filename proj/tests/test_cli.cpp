#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "heapwc/formulas.hpp"
#include "heapwc/heap.hpp"

#include <json.hpp>

#include <cstdlib>
#include <fstream>
#include <sys/wait.h>
#include <sstream>
#include <string>

// exercises the installed command-line binary end to end

namespace {

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

int run(const std::string& args, const std::string& stdout_path = "/dev/null") {
    std::string cmd =
        std::string(HEAPWC_CLI_PATH) + " " + args + " > " + stdout_path + " 2>/dev/null";
    int status = std::system(cmd.c_str());
    return WEXITSTATUS(status);
}

std::vector<int> parse_csv_line(const std::string& line) {
    std::vector<int> values;
    std::istringstream in(line);
    std::string field;
    while (std::getline(in, field, ','))
        values.push_back(std::stoi(field));
    return values;
}

} // namespace

TEST_CASE("gen heap and array") {
    CHECK(run("gen heap 2 --out /tmp/cli_h2.txt") == 0);
    CHECK(slurp("/tmp/cli_h2.txt") == "2,1\n");

    CHECK(run("gen heap 12 --out /tmp/cli_h12.txt") == 0);
    std::string line = slurp("/tmp/cli_h12.txt");
    line.pop_back();
    CHECK(parse_csv_line(line) ==
          std::vector<int>{12, 11, 7, 9, 10, 2, 3, 6, 8, 5, 4, 1});

    CHECK(run("gen array 500 --format json --out /tmp/cli_a500.json") == 0);
    auto doc = nlohmann::json::parse(slurp("/tmp/cli_a500.json"));
    CHECK(doc["n"] == 500);
    std::vector<int> a = doc["values"].get<std::vector<int>>();
    REQUIRE(a.size() == 500);
    auto sort = heapwc::heapsort(a);
    CHECK(sort.comparisons == 7953);
    CHECK(sort.makeheap_comparisons == 986);

    CHECK(run("gen heap 1") == 2);      // below the minimum size
    CHECK(run("gen blob 12") == 2);     // unknown kind
    CHECK(run("gen heap") == 2);        // missing size
}

TEST_CASE("gen text output revalidates byte for byte") {
    CHECK(run("gen heap 37 --out /tmp/cli_h37.txt") == 0);
    std::string body = slurp("/tmp/cli_h37.txt");
    std::string line = body.substr(0, body.size() - 1);
    std::vector<int> values = parse_csv_line(line);
    CHECK_NOTHROW(heapwc::validate(values));
    std::string again;
    for (size_t i = 0; i < values.size(); ++i)
        again += (i ? "," : "") + std::to_string(values[i]);
    CHECK(again + "\n" == body);
}

TEST_CASE("verify sweep") {
    CHECK(run("verify 2 64 --out /tmp/cli_sweep.csv") == 0);
    std::istringstream in(slurp("/tmp/cli_sweep.csv"));
    std::string header;
    std::getline(in, header);
    CHECK(header ==
          "N,makeheap_measured,makeheap_formula,removeall_measured,"
          "removeall_formula,total_measured,total_formula,match");
    int rows = 0;
    for (std::string line; std::getline(in, line); ++rows)
        CHECK(line.substr(line.rfind(',') + 1) == "true");
    CHECK(rows == 63);

    CHECK(run("verify 500 500 --out /tmp/cli_500.csv") == 0);
    std::istringstream in500(slurp("/tmp/cli_500.csv"));
    std::string line;
    std::getline(in500, line);
    std::getline(in500, line);
    CHECK(line == "500,986,986,6967,6967,7953,7953,true");

    CHECK(run("verify 2 200 --jobs 4 --out /tmp/cli_par.csv") == 0);
    CHECK(run("verify 5 2") == 2); // bad range
}

TEST_CASE("trace") {
    CHECK(run("trace 12 win", "/tmp/cli_trace12.txt") == 0);
    std::string out = slurp("/tmp/cli_trace12.txt");
    CHECK(out.find("<1, 1, 1, 1, 2, 1, 1, 4, 1, 4, 1>") != std::string::npos);
    CHECK(out.find("Level 0:               12") != std::string::npos);
    CHECK(out.find("H[7] -> H[8]") != std::string::npos);

    CHECK(run("trace 16 par", "/tmp/cli_trace16.txt") == 0);
    std::string par = slurp("/tmp/cli_trace16.txt");
    // the complete heap passed on the way has the expected last level
    CHECK(par.find("Level 3:  4^^^6  10^^^5   7^^^8   2^^^1") !=
          std::string::npos);

    CHECK(run("trace 12 greedy") == 2);
}

TEST_CASE("oracle") {
    CHECK(run("oracle 7 heap") == 0);
    CHECK(run("oracle 8 perm") == 0);
    CHECK(run("oracle 12 singularity") == 0);
    CHECK(run("oracle 7 worstset") == 0);
    CHECK(run("oracle 28 singularity") == 2); // beyond the ceiling
}

TEST_CASE("census") {
    CHECK(run("census --out /tmp/cli_census.json") == 0);
    auto doc = nlohmann::json::parse(slurp("/tmp/cli_census.json"));
    CHECK(doc["count"] == 1017);
    CHECK(doc["max_size"] == 22);
    bool found20 = false;
    std::vector<int> h20{20, 19, 15, 18, 10, 13, 14, 16, 17, 4,
                         5,  7,  12, 2,  3,  9,  11, 8,  6,  1};
    for (const auto& entry : doc["heaps"])
        if (entry["values"].get<std::vector<int>>() == h20)
            found20 = true;
    CHECK(found20);
}

TEST_CASE("usage errors") {
    CHECK(run("") == 2);
    CHECK(run("frobnicate") == 2);
    CHECK(run("--help") == 0);
}
