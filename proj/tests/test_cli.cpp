#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <string>

#ifndef IDIG_CLI_PATH
#error "IDIG_CLI_PATH must point at the built binary"
#endif

namespace {

struct RunResult {
    int exit_code;
    std::string out;
};

RunResult run(const std::string& args) {
    std::string cmd = std::string(IDIG_CLI_PATH) + " " + args + " 2>/dev/null";
    FILE* p = popen(cmd.c_str(), "r");
    REQUIRE(p != nullptr);
    std::string out;
    char buf[4096];
    std::size_t got;
    while ((got = fread(buf, 1, sizeof buf, p)) > 0) out.append(buf, got);
    int status = pclose(p);
    return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

std::string write_temp(const std::string& name, const std::string& content) {
    std::string path = std::string("/tmp/idig_cli_") + name;
    std::ofstream f(path);
    f << content;
    return path;
}

} // namespace

TEST_CASE("check reports certificate parts and exit code") {
    std::string fig = write_temp("fig.txt", "digraph 4\n0 2\n2 1\n3 1\n");
    RunResult good = run("check " + fig + " --set 0,3");
    CHECK(good.exit_code == 0);
    CHECK(good.out == "independent yes\ndominating yes\nids yes\n");

    RunResult bad = run("check " + fig + " --set 0,2,3");
    CHECK(bad.exit_code == 1);
    CHECK(bad.out == "independent no\ndominating yes\nids no\n");
}

TEST_CASE("solve on the even and odd directed cycles") {
    std::string c4 = write_temp("c4.txt", "digraph 4\n0 1\n1 2\n2 3\n3 0\n");
    RunResult r4 = run("solve " + c4);
    CHECK(r4.exit_code == 0);
    CHECK(r4.out == "found 0 2\n");

    std::string c5 = write_temp("c5.txt", "digraph 5\n0 1\n1 2\n2 3\n3 4\n4 0\n");
    RunResult r5 = run("solve " + c5);
    CHECK(r5.exit_code == 1);
    CHECK(r5.out == "none directed-odd-cycle\n");

    RunResult forced = run("solve " + c4 + " --family cycle");
    CHECK(forced.exit_code == 0);
    CHECK(forced.out == "found 0 2\n");
}

TEST_CASE("enumerate lists sets in order") {
    std::string c4 = write_temp("c4b.txt", "digraph 4\n0 1\n1 2\n2 3\n3 0\n");
    RunResult r = run("enumerate " + c4);
    CHECK(r.exit_code == 0);
    CHECK(r.out == "0 2\n1 3\n");

    std::string tri = write_temp("tri.txt", "digraph 3\n0 1\n1 2\n2 0\n");
    RunResult none = run("enumerate " + tri);
    CHECK(none.exit_code == 1);
    CHECK(none.out.empty());
}

TEST_CASE("idomatic with witnesses") {
    std::string c6 = write_temp("c6.txt", "digraph 6\n0 1\n1 2\n2 3\n3 4\n4 5\n5 0\n");
    RunResult r = run("idomatic " + c6);
    CHECK(r.exit_code == 0);
    CHECK(r.out == "idomatic 2\nmethod closed_form\nwitness 0 2 4\nwitness 1 3 5\n");

    std::string c5 = write_temp("c5b.txt", "digraph 5\n0 1\n1 2\n2 3\n3 4\n4 0\n");
    RunResult z = run("idomatic " + c5);
    CHECK(z.exit_code == 1);
    CHECK(z.out == "idomatic 0\nmethod closed_form\n");
}

TEST_CASE("classify emits family tags") {
    std::string p3 = write_temp("p3.txt", "digraph 3\n0 1\n1 2\n");
    RunResult r = run("classify " + p3);
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("directed_path") != std::string::npos);
    CHECK(r.out.find("dag") != std::string::npos);
}

TEST_CASE("verify a single statement") {
    RunResult r = run("verify L-EVENCYC --bound 12");
    CHECK(r.exit_code == 0);
    CHECK(r.out == "L-EVENCYC 10 0 0\n");

    RunResult bad = run("verify NOSUCH");
    CHECK(bad.exit_code == 2);
}

TEST_CASE("gen then solve round trip") {
    RunResult g = run("gen --kind cycle --n 8 --directed");
    CHECK(g.exit_code == 0);
    std::string path = write_temp("gen.txt", g.out);
    RunResult s = run("solve " + path);
    CHECK(s.exit_code == 0);
    CHECK(s.out == "found 0 2 4 6\n");
}

TEST_CASE("orient away produces an edge list") {
    std::string c4 = write_temp("uc4.txt", "graph 4\n0 1\n1 2\n2 3\n0 3\n");
    RunResult r = run("orient " + c4 + " --set 0,2 --mode away");
    CHECK(r.exit_code == 0);
    CHECK(r.out == "digraph 4\n0 1\n0 3\n2 1\n2 3\n");

    RunResult not_ids = run("orient " + c4 + " --set 0,1 --mode away");
    CHECK(not_ids.exit_code == 2);
}

TEST_CASE("input errors exit with 2") {
    std::string digon = write_temp("digon.txt", "digraph 2\n0 1\n1 0\n");
    CHECK(run("solve " + digon).exit_code == 2);

    std::string garbage = write_temp("garbage.txt", "digraph 2\n0 x\n");
    CHECK(run("check " + garbage + " --set 0").exit_code == 2);

    CHECK(run("solve /tmp/idig_cli_missing_file.txt").exit_code == 2);
    CHECK(run("frobnicate").exit_code == 2);
    CHECK(run("--help").exit_code == 0);
}

TEST_CASE("json output is stable across runs") {
    std::string c4 = write_temp("c4c.txt", "digraph 4\n0 1\n1 2\n2 3\n3 0\n");
    RunResult a = run("--json solve " + c4);
    RunResult b = run("--json solve " + c4);
    CHECK(a.exit_code == 0);
    CHECK(a.out == b.out);
    CHECK(a.out.find("\"verb\":\"solve\"") != std::string::npos);
    CHECK(a.out.find("\"input_digest\"") != std::string::npos);
    CHECK(a.out.find("\"elapsed_ms\":0") != std::string::npos);

    RunResult v1 = run("--json verify T2 --bound 4");
    RunResult v2 = run("--json verify T2 --bound 4");
    CHECK(v1.exit_code == 0);
    CHECK(v1.out == v2.out);
}
