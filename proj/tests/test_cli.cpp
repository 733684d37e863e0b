#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sys/wait.h>
#include <unistd.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <map>
#include <sstream>
#include <string>

#ifndef DIRACAC_CLI_BINARY
#error "DIRACAC_CLI_BINARY must point at the built CLI"
#endif

namespace fs = std::filesystem;

namespace {

struct RunResult {
    int exit_code = -1;
    std::string out;
    std::string err;
};

fs::path scratch_dir() {
    static const fs::path dir = [] {
        fs::path d = fs::temp_directory_path() /
                     ("diracac_cli_test_" + std::to_string(::getpid()));
        fs::create_directories(d);
        return d;
    }();
    return dir;
}

std::string slurp(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

RunResult run_cli(const std::string& args, const std::string& tag) {
    const fs::path out = scratch_dir() / (tag + ".out");
    const fs::path err = scratch_dir() / (tag + ".err");
    const std::string cmd = std::string("\"") + DIRACAC_CLI_BINARY + "\" " +
                            args + " > " + out.string() + " 2> " +
                            err.string();
    const int status = std::system(cmd.c_str());
    RunResult r;
    r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    r.out = slurp(out);
    r.err = slurp(err);
    return r;
}

}  // namespace

TEST_CASE("spectrum: ground state row") {
    const RunResult r = run_cli(
        "spectrum --background minkowski --mass 1 --omega 1 --mu-lambda 0 "
        "--k 0 --n-max 0 --l 0 --spin +1",
        "ground");
    CHECK(r.exit_code == 0);
    CHECK(r.out ==
          "n,l,s,k,eta,chi,mu_lambda,zeta,beta,energy\n"
          "0,0,1,0,1,0,0,0,2,1\n");
}

TEST_CASE("spectrum: sqrt(3) worked value and negative flag values") {
    const RunResult r = run_cli(
        "spectrum --background minkowski --mu-lambda 0.5 --l -1 --spin +1",
        "sqrt3");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("1.7320508075688772") != std::string::npos);
}

TEST_CASE("spectrum: json format") {
    const RunResult r = run_cli(
        "spectrum --mu-lambda 0.5 --l -1 --format json", "json");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("\"energy\": 1.7320508075688772") != std::string::npos);
    CHECK(r.out.find("\"kind\": \"minkowski\"") != std::string::npos);
}

TEST_CASE("spectrum: eta out of range exits 2") {
    const RunResult r = run_cli(
        "spectrum --background string --eta 1.2 --l 0", "bad_eta");
    CHECK(r.exit_code == 2);
    CHECK(r.err.find("eta out of range") != std::string::npos);
}

TEST_CASE("spectrum: both spins over a window") {
    const RunResult r = run_cli(
        "spectrum --n-max 1 --l-min -1 --l-max 1 --spin both", "window");
    CHECK(r.exit_code == 0);
    int rows = -1;  // discount the header
    for (char c : r.out) rows += c == '\n';
    CHECK(rows == 12);
}

TEST_CASE("identical invocations give byte-identical files") {
    const std::string base =
        "spectrum --background dislocation --eta 0.8 --chi 0.3 --k 0.7 "
        "--mu-lambda 0.2 --n-max 2 --l-min -2 --l-max 2 --spin both --out ";
    const fs::path a = scratch_dir() / "det_a.csv";
    const fs::path b = scratch_dir() / "det_b.csv";
    CHECK(run_cli(base + a.string(), "det1").exit_code == 0);
    CHECK(run_cli(base + b.string(), "det2").exit_code == 0);
    const std::string ca = slurp(a), cb = slurp(b);
    CHECK(!ca.empty());
    CHECK(ca == cb);
}

TEST_CASE("config file fallback and flag precedence") {
    const fs::path cfg = scratch_dir() / "run.cfg";
    {
        std::ofstream out(cfg);
        out << "# test configuration\n"
               "background = minkowski\n"
               "mu_lambda = 0.5\n"
               "l = -1\n"
               "mass = 4\n";
    }
    const RunResult fallback =
        run_cli("spectrum --config " + cfg.string(), "cfg1");
    CHECK(fallback.exit_code == 0);
    // mass 4: E = sqrt(16 + 4*4*0.5) = sqrt(24)
    CHECK(fallback.out.find("4.8989794855663558") != std::string::npos);

    const RunResult override_mass =
        run_cli("spectrum --config " + cfg.string() + " --mass 1", "cfg2");
    CHECK(override_mass.exit_code == 0);
    CHECK(override_mass.out.find("1.7320508075688772") != std::string::npos);
}

TEST_CASE("validate: self-test hook fails, tiny honest run passes") {
    const RunResult honest =
        run_cli("validate --count 1 --points 256", "val_ok");
    CHECK(honest.exit_code == 0);
    CHECK(honest.out.find("max relative error") != std::string::npos);

    const RunResult corrupt =
        run_cli("validate --count 1 --points 256 --corrupt-bracket",
                "val_bad");
    CHECK(corrupt.exit_code == 1);
    CHECK(corrupt.err.find("FAIL") != std::string::npos);

    const RunResult zero = run_cli("validate --count 0", "val_zero");
    CHECK(zero.exit_code == 2);
}

TEST_CASE("validate: report file is written") {
    const fs::path report = scratch_dir() / "report.json";
    const RunResult r = run_cli(
        "validate --count 1 --points 256 --out " + report.string(),
        "val_report");
    CHECK(r.exit_code == 0);
    const std::string body = slurp(report);
    CHECK(body.find("\"all_pass\": true") != std::string::npos);
    CHECK(body.find("\"zeta_over_eta\"") != std::string::npos);
}

TEST_CASE("sweep: chi sweep demands the dislocation background") {
    const RunResult r = run_cli(
        "sweep --background string --eta 0.5 --sweep chi --from 0 --to 1 "
        "--steps 5",
        "sweep_chi_bad");
    CHECK(r.exit_code == 2);

    const RunResult ok = run_cli(
        "sweep --background dislocation --eta 0.5 --k 1 --sweep chi --from 0 "
        "--to 1 --steps 5 --l 0",
        "sweep_chi_ok");
    CHECK(ok.exit_code == 0);
    CHECK(ok.out.rfind("chi,n,l,s,zeta,energy,current\n", 0) == 0);
}

TEST_CASE("sweep: eta range must stay inside (0,1]") {
    const RunResult r = run_cli(
        "sweep --background string --sweep eta --from 0.5 --to 1.2 --steps 3",
        "sweep_eta_bad");
    CHECK(r.exit_code == 2);

    const RunResult low = run_cli(
        "sweep --background string --sweep eta --from 0 --to 1 --steps 3",
        "sweep_eta_zero");
    CHECK(low.exit_code == 2);

    const RunResult steps = run_cli(
        "sweep --background string --sweep eta --from 0.5 --to 1 --steps 1",
        "sweep_steps");
    CHECK(steps.exit_code == 2);
}

TEST_CASE("sweep: energy decreases monotonically to the flat-space value") {
    const fs::path out = scratch_dir() / "eta_sweep.csv";
    const RunResult r = run_cli(
        "sweep --background string --sweep eta --from 0.5 --to 1 --steps 6 "
        "--l -1 --spin +1 --out " + out.string(),
        "sweep_eta_ok");
    CHECK(r.exit_code == 0);
    std::ifstream in(out);
    std::string line;
    std::getline(in, line);  // header
    double prev = 1e300;
    double last = 0.0;
    int rows = 0;
    while (std::getline(in, line)) {
        const auto pos = line.find_last_of(',');
        const auto pos2 = line.find_last_of(',', pos - 1);
        last = std::stod(line.substr(pos2 + 1, pos - pos2 - 1));
        CHECK(last < prev);
        prev = last;
        ++rows;
    }
    CHECK(rows == 6);
    CHECK(last == doctest::Approx(std::sqrt(5.0)).epsilon(1e-12));
}

TEST_CASE("sweep: energy is 1-periodic in mu_lambda under an l-shift") {
    const fs::path out = scratch_dir() / "mu_sweep.csv";
    const RunResult r = run_cli(
        "sweep --sweep mu-lambda --from 0 --to 1 --steps 2 --l-min 0 "
        "--l-max 1 --spin +1 --mu-lambda 0 --out " + out.string(),
        "sweep_mu");
    CHECK(r.exit_code == 0);
    // rows: (mu,l) = (0,0),(0,1),(1,0),(1,1); energy(0,1) == energy(1,0)
    std::ifstream in(out);
    std::string line;
    std::getline(in, line);
    std::map<std::pair<std::string, std::string>, std::string> energy;
    while (std::getline(in, line)) {
        std::stringstream ss(line);
        std::vector<std::string> cells;
        std::string cell;
        while (std::getline(ss, cell, ',')) cells.push_back(cell);
        REQUIRE(cells.size() >= 6);
        energy[{cells[0], cells[2]}] = cells[5];
    }
    CHECK(energy.at({"0", "1"}) == energy.at({"1", "0"}));
}

TEST_CASE("spinor: k != 0 populates the third component") {
    const fs::path out = scratch_dir() / "spinor_k.csv";
    const RunResult r = run_cli(
        "spinor --mu-lambda 0.5 --l -1 --spin +1 --n 1 --k 0.4 --points 512 "
        "--out " + out.string(),
        "spinor_k");
    // the transverse construction is exact only at k = 0, so the gate may
    // fire; the file must exist either way with a nonzero third component
    CHECK((r.exit_code == 0 || r.exit_code == 1));
    std::ifstream in(out);
    std::string header;
    std::getline(in, header);
    CHECK(header == "rho,re1,im1,re2,im2,re3,im3,re4,im4");
    bool third_nonzero = false;
    std::string line;
    while (std::getline(in, line)) {
        int col = 0;
        std::stringstream ss(line);
        std::string cell;
        while (std::getline(ss, cell, ',')) {
            if ((col == 5 || col == 6) && std::stod(cell) != 0.0)
                third_nonzero = true;
            ++col;
        }
    }
    CHECK(third_nonzero);
}

TEST_CASE("spinor: flat ground state passes the residual gate") {
    const fs::path out = scratch_dir() / "spinor_ground.csv";
    const RunResult r = run_cli(
        "spinor --mu-lambda 0 --l -1 --spin +1 --n 0 --out " + out.string(),
        "spinor_ground");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("\"residual\":") != std::string::npos);
    CHECK(r.out.find("below gate") != std::string::npos);
}

TEST_CASE("current: report totals match the row sum") {
    const RunResult r = run_cli(
        "current --mu-lambda 0.3 --n-max 0 --l-min -3 --l-max -1 --spin both "
        "--format json",
        "current");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("\"total\":") != std::string::npos);
    CHECK(r.out.find("\"excluded\": []") != std::string::npos);
}

TEST_CASE("usage errors exit 2") {
    CHECK(run_cli("spectrum --background nowhere", "bad_bg").exit_code == 2);
    CHECK(run_cli("spectrum --spin sideways", "bad_spin").exit_code == 2);
    CHECK(run_cli("spectrum --format yaml", "bad_fmt").exit_code == 2);
    CHECK(run_cli("nonsense", "bad_cmd").exit_code == 2);
    CHECK(run_cli("", "no_cmd").exit_code == 2);
    CHECK(run_cli("spectrum --mass -1", "bad_mass").exit_code == 2);
}

TEST_CASE("help exits 0") {
    CHECK(run_cli("--help", "help").exit_code == 0);
    CHECK(run_cli("spectrum --help", "help_sub").exit_code == 0);
}
