#include <catch2/catch_amalgamated.hpp>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

#include "support/oracles.hpp"
#include "tdesign/block_design.hpp"

using namespace tdesign;
namespace ts = testsupport;

namespace {

struct RunResult {
    int exit_code = -1;
    std::string out;
};

RunResult run_cli(const std::string& args) {
    std::string cmd = std::string(TDESIGN_CLI_PATH) + " " + args + " 2>&1";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    RunResult res;
    std::array<char, 4096> buf;
    size_t n;
    while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) res.out.append(buf.data(), n);
    int status = pclose(pipe);
    res.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return res;
}

std::string temp_path(const std::string& name) {
    return std::string("cli_tmp_") + name;
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path);
    REQUIRE(out.good());
    out << content;
}

}  // namespace

TEST_CASE("params prints the 5-(36,10) family figures") {
    RunResult r = run_cli("params -t 5 -v 36 -k 10");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("lambda_min = 63\n") != std::string::npos);
    CHECK(r.out.find("lambda_max = 169911\n") != std::string::npos);
    CHECK(r.out.find("m_max = 2697\n") != std::string::npos);
    CHECK(r.out.find("LIM = 1348\n") != std::string::npos);
}

TEST_CASE("params usage errors exit 2") {
    CHECK(run_cli("params -t 5 -v 4 -k 10").exit_code == 2);
    CHECK(run_cli("params -t 5").exit_code == 2);
    CHECK(run_cli("nonsense").exit_code == 2);
}

TEST_CASE("solve output is byte-stable and worker-independent") {
    std::string base = "solve -t 4 -k 8 --v1 17 --v2 18";
    RunResult one = run_cli(base);
    CHECK(one.exit_code == 0);
    std::string expected =
        "15680\t448\t110101011\t13,0,264,320\t14,0,336,448\t0\t-\n"
        "15785\t451\t111010111\t0,78,22,395\t0,91,28,553\t0\t-\n"
        "31465\t899\t111111111\t13,78,286,715\t14,91,364,1001\t1\t-\n"
        "# total=3 below-lim=1 trivial=1\n";
    CHECK(one.out == expected);
    RunResult rep = run_cli(base);
    CHECK(rep.out == one.out);
    RunResult multi = run_cli(base + " --workers 4");
    CHECK(multi.out == one.out);
}

TEST_CASE("solve --limit 0 prints only the summary") {
    RunResult r = run_cli("solve -t 2 -k 5 --v1 7 --v2 7 --limit 0");
    CHECK(r.exit_code == 0);
    // LIM(2,5,14) = floor(220/40) = 5: only the three m=4 solutions sit below it
    CHECK(r.out == "# total=7 below-lim=3 trivial=1\n");
}

TEST_CASE("solve honors clamps and the symmetric flag") {
    RunResult fixed = run_cli("solve -t 2 -k 5 --v1 7 --v2 7 --fix left:3=3 --limit 0");
    CHECK(fixed.exit_code == 0);
    CHECK(fixed.out.find("total=2") != std::string::npos);  // (3,8,0) and trivial-excluded? no: x3=3 pins
    // multiplier-unit pinning: m=3 on the (left,3) slot is lambda = 3 here
    RunResult fixed_m = run_cli("solve -t 2 -k 5 --v1 7 --v2 7 --fix-m left:3=3 --limit 0");
    CHECK(fixed_m.exit_code == 0);
    CHECK(fixed_m.out == fixed.out);
    RunResult sym = run_cli("solve -t 2 -k 5 --v1 7 --v2 7 --symmetric");
    CHECK(sym.exit_code == 0);
    CHECK(sym.out.find("total=3") != std::string::npos);
    CHECK(run_cli("solve -t 2 -k 5 --v1 6 --v2 7 --symmetric").exit_code == 2);
    CHECK(run_cli("solve -t 2 -k 5 --v1 7 --v2 7 --fix left:2=1").exit_code == 2);
}

TEST_CASE("solve with a catalog reports filter counts") {
    std::string cat = temp_path("t1.cat");
    write_file(cat, "2 7 3 : 2\n");
    RunResult r = run_cli("solve -t 2 -k 5 --v1 7 --v2 7 --catalog " + cat + " --limit 0");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("catalog-ok=") != std::string::npos);
    CHECK(r.out.find("catalog-dropped=") != std::string::npos);
    CHECK(run_cli("solve -t 2 -k 5 --v1 7 --v2 7 --catalog missing.cat").exit_code == 2);
    std::remove(cat.c_str());
}

TEST_CASE("verify-solution: pass, fail, and parse-error exits") {
    std::string path = temp_path("sols.txt");
    // two valid lines from the known (2,5,7,7) set
    write_file(path,
               "# fixture\n"
               "80\t4\t111111\t2,2,10\t2,2,10\n"
               "140\t7\t011110\t3,8,0\t3,8,0\n");
    RunResult ok = run_cli("verify-solution " + path + " -t 2 -k 5 --v1 7 --v2 7");
    CHECK(ok.exit_code == 0);
    CHECK(ok.out.find("line 2: Lambda=80") != std::string::npos);
    CHECK(ok.out.find("PASS") != std::string::npos);
    CHECK(ok.out.find("# checked=2 passed=2") != std::string::npos);
    // corrupt one index: equality fails, exit 1
    write_file(path, "80\t4\t111111\t2,2,10\t2,4,10\n");
    RunResult bad = run_cli("verify-solution " + path + " -t 2 -k 5 --v1 7 --v2 7");
    CHECK(bad.exit_code == 1);
    CHECK(bad.out.find("FAIL") != std::string::npos);
    // unparseable line: exit 2 with the line number
    write_file(path, "garbage\n");
    RunResult ugly = run_cli("verify-solution " + path + " -t 2 -k 5 --v1 7 --v2 7");
    CHECK(ugly.exit_code == 2);
    CHECK(ugly.out.find("line 1: parse error") != std::string::npos);
    std::remove(path.c_str());
}

TEST_CASE("check-design on the Fano plane and a corrupted file") {
    std::string path = temp_path("fano.blocks");
    {
        std::ofstream out(path);
        write_block_file(out, ts::fano());
    }
    RunResult ok = run_cli("check-design " + path + " -t 2");
    CHECK(ok.exit_code == 0);
    CHECK(ok.out.find("v=7 k=3 b=7") != std::string::npos);
    CHECK(ok.out.find("simple yes") != std::string::npos);
    CHECK(ok.out.find("t-design yes t=2 lambda=1") != std::string::npos);
    // duplicate block: not simple, exit 1
    BlockDesign dup = ts::fano();
    dup.blocks.push_back(dup.blocks[0]);
    std::sort(dup.blocks.begin(), dup.blocks.end());
    {
        std::ofstream out(path);
        write_block_file(out, dup);
    }
    RunResult nd = run_cli("check-design " + path + " -t 2");
    CHECK(nd.exit_code == 1);
    CHECK(nd.out.find("simple no") != std::string::npos);
    write_file(path, "not a block file\n");
    CHECK(run_cli("check-design " + path + " -t 2").exit_code == 2);
    std::remove(path.c_str());
}

TEST_CASE("catalog validate and close") {
    std::string path = temp_path("known.cat");
    write_file(path, "5 18 6 : 4\n");
    RunResult val = run_cli("catalog validate " + path);
    CHECK(val.exit_code == 0);
    CHECK(val.out.find("ok families=1") != std::string::npos);
    RunResult closed = run_cli("catalog close " + path);
    CHECK(closed.exit_code == 0);
    CHECK(closed.out.find("5 18 6 : 4 9\n") != std::string::npos);
    // closure output is loadable (round trip through a file)
    std::string out2 = temp_path("closed.cat");
    CHECK(run_cli("catalog close " + path + " -o " + out2).exit_code == 0);
    CHECK(run_cli("catalog validate " + out2).exit_code == 0);
    // content errors exit 1, format errors exit 2
    write_file(path, "5 18 6 : 99\n");
    CHECK(run_cli("catalog validate " + path).exit_code == 1);
    write_file(path, "5 18 6 what\n");
    CHECK(run_cli("catalog validate " + path).exit_code == 2);
    std::remove(path.c_str());
    std::remove(out2.c_str());
}

TEST_CASE("compose end to end from files") {
    // tiny all-complete case: t=2, k=3, v1=v2=4 -> complete 3-design on 8 points
    std::string sol = temp_path("trivial.sol");
    write_file(sol, "6\t1\t1111\t2\t2\n");  // lambda = 6 = C(6,1) = lambda_min(2,3,8)
    std::string out = temp_path("composed.blocks");
    // free slots need files; an unreadable path is a usage error
    RunResult r = run_cli("compose --solution " + sol +
                          " -t 2 -k 3 --v1 4 --v2 4 --ingredient left:3=missing.blocks -o " + out);
    CHECK(r.exit_code == 2);

    // supply both free slots from files
    std::string lf = temp_path("left3.blocks"), rf = temp_path("right3.blocks");
    {
        std::ofstream o(lf);
        write_block_file(o, complete_design(4, 3));
    }
    {
        std::ofstream o(rf);
        write_block_file(o, complete_design(4, 3));
    }
    RunResult good = run_cli("compose --solution " + sol + " -t 2 -k 3 --v1 4 --v2 4" +
                             " --ingredient left:3=" + lf + " --ingredient right:3=" + rf +
                             " -o " + out);
    CHECK(good.exit_code == 0);
    CHECK(good.out.find("blocks 56") != std::string::npos);
    CHECK(good.out.find("PASS") != std::string::npos);
    RunResult check = run_cli("check-design " + out + " -t 2");
    CHECK(check.exit_code == 0);
    CHECK(check.out.find("lambda=6") != std::string::npos);
    // provenance sidecar exists and has one line per block
    std::ifstream prov(out + ".prov");
    REQUIRE(prov.good());
    int lines = 0;
    std::string line;
    while (std::getline(prov, line)) ++lines;
    CHECK(lines == 56);
    // scale guard
    RunResult guard = run_cli("compose --solution " + sol + " -t 2 -k 3 --v1 4 --v2 4" +
                              " --ingredient left:3=" + lf + " --ingredient right:3=" + rf +
                              " -o " + out + " --max-blocks 10");
    CHECK(guard.exit_code == 2);
    CHECK(guard.out.find("scale guard") != std::string::npos);
    for (const auto& p : {sol, out, out + ".prov", lf, rf}) std::remove(p.c_str());
}
