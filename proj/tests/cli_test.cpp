// SPDX-License-Identifier: Apache-2.0
//
// End-to-end checks of the dirsim binary: command dispatch, exit codes,
// output files and their determinism. argv[1] = binary, argv[2] = scenario.

#include <sys/wait.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <json.hpp>

namespace fs = std::filesystem;

namespace {

int g_failures = 0;

void expect(bool ok, const std::string& what) {
    if (!ok) {
        ++g_failures;
        std::cerr << "FAILED: " << what << "\n";
    }
}

struct RunResult {
    int exit_code = -1;
    std::string out;
    std::string err;
};

std::string slurp(const fs::path& path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

RunResult run(const std::string& command, const fs::path& dir) {
    const fs::path out_file = dir / "stdout.txt";
    const fs::path err_file = dir / "stderr.txt";
    const std::string full =
        command + " > " + out_file.string() + " 2> " + err_file.string();
    const int status = std::system(full.c_str());
    RunResult result;
    result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    result.out = slurp(out_file);
    result.err = slurp(err_file);
    return result;
}

int count_lines(const std::string& text) {
    int n = 0;
    for (const char c : text)
        if (c == '\n') ++n;
    return n;
}

}  // namespace

int main(int argc, char** argv) {
    if (argc < 3) {
        std::cerr << "usage: cli_test <dirsim-binary> <scenario>\n";
        return 2;
    }
    const std::string binary = argv[1];
    const std::string scenario = argv[2];
    const fs::path work = fs::temp_directory_path() / "dirsim_cli_test";
    fs::remove_all(work);
    fs::create_directories(work);

    {
        const RunResult r = run(binary + " validate --scenario " + scenario, work);
        expect(r.exit_code == 0, "validate exits 0");
        expect(r.out.find("rank_one_margin") != std::string::npos,
               "validate prints the rank-one margin");
        expect(r.out.find("235.702") != std::string::npos,
               "validate reports margin 235.702 at the default budget");
    }

    {
        const fs::path csv = work / "sweep.csv";
        const RunResult r =
            run(binary + " sweep --scenario " + scenario + " --k 120 --step 20 --seed 7" +
                    " --out " + csv.string(),
                work);
        expect(r.exit_code == 0, "sweep exits 0");
        const std::string content = slurp(csv);
        expect(count_lines(content) == 6, "sweep CSV has a header plus 5 rows");
        expect(content.rfind("k1,k2,snr_exact_db,snr_closed_db,snr_single_db\n", 0) == 0,
               "sweep CSV header");

        const std::string manifest_text = slurp(fs::path(csv.string() + ".manifest.json"));
        expect(!manifest_text.empty(), "sweep manifest exists");
        const auto manifest = nlohmann::json::parse(manifest_text, nullptr, false);
        expect(!manifest.is_discarded(), "sweep manifest parses as JSON");
        if (!manifest.is_discarded()) {
            expect(manifest["command"] == "sweep", "manifest names the command");
            expect(manifest["seed"] == 7, "manifest records the seed");
            expect(manifest["parameters"]["k"] == "120", "manifest records --k");
        }

        // Re-running with a different parallelism degree reproduces the bytes.
        const fs::path csv2 = work / "sweep2.csv";
        run("DIRSIM_THREADS=1 " + binary + " sweep --scenario " + scenario +
                " --k 120 --step 20 --seed 7 --out " + csv2.string(),
            work);
        const fs::path csv3 = work / "sweep3.csv";
        run("DIRSIM_THREADS=3 " + binary + " sweep --scenario " + scenario +
                " --k 120 --step 20 --seed 7 --out " + csv3.string(),
            work);
        expect(slurp(csv2) == content, "sweep CSV is byte-stable across runs");
        expect(slurp(csv3) == content, "sweep CSV is byte-stable across thread counts");
    }

    {
        const fs::path csv = work / "rician.csv";
        const RunResult r =
            run(binary + " rician --scenario " + scenario +
                    " --k1 9 --k2 9 --taus inf,2 --trials 5 --seed 3 --out " + csv.string(),
                work);
        expect(r.exit_code == 0, "rician exits 0");
        const std::string content = slurp(csv);
        expect(count_lines(content) == 5, "rician CSV has a header plus 2x2 rows");
        expect(content.find("inf,5,") != std::string::npos, "tau=inf row present");
        expect(content.find(",double\n") != std::string::npos, "double rows present");
        expect(content.find(",single\n") != std::string::npos, "single rows present");

        // The default three factors produce 3 x 2 result rows.
        const fs::path csv6 = work / "rician6.csv";
        const RunResult r6 =
            run(binary + " rician --scenario " + scenario +
                    " --k1 4 --k2 4 --taus inf,3,1 --trials 2 --out " + csv6.string(),
                work);
        expect(r6.exit_code == 0, "three-factor rician exits 0");
        expect(count_lines(slurp(csv6)) == 7, "three factors emit 6 result rows");
    }

    {
        const fs::path csv = work / "doubling.csv";
        const RunResult r = run(binary + " doubling --scenario " + scenario +
                                    " --k 8 --out " + csv.string(),
                                work);
        expect(r.exit_code == 0, "doubling exits 0");
        expect(r.out.find("delta_double") != std::string::npos, "doubling prints deltas");
        expect(count_lines(slurp(csv)) == 3, "doubling CSV has a header plus 2 rows");
    }

    {
        const fs::path csv = work / "crossover.csv";
        const RunResult r = run(binary + " crossover --scenario " + scenario +
                                    " --k-min 24 --k-max 40 --step 4 --out " + csv.string(),
                                work);
        expect(r.exit_code == 0, "crossover (not found in range) still exits 0");
        expect(r.out.find("no crossover") != std::string::npos,
               "crossover reports an explicit not-found result");
    }

    {
        const fs::path csv = work / "missing.csv";
        const RunResult r = run(binary + " sweep --scenario /nonexistent.scn --out " +
                                    csv.string(),
                                work);
        expect(r.exit_code == 2, "missing scenario file exits 2");
        expect(!fs::exists(csv), "failed runs leave no output file");
    }

    {
        // Scenario with an invalid spacing: rejected naming the key, no output.
        const fs::path bad = work / "bad.scn";
        std::ofstream(bad) << "bs.position = 0.87 0.5 0\n"
                              "user.position = 13 92.5 0\n"
                              "irs1.anchor = 0 0 0\n"
                              "irs1.dir_a = 0 0 1\n"
                              "irs1.dir_b = 1 0 0\n"
                              "irs1.spacing = -0.5\n"
                              "irs2.anchor = 0 100 0\n"
                              "irs2.dir_a = 1 0 0\n"
                              "irs2.dir_b = 0 0 1\n";
        const fs::path csv = work / "bad.csv";
        const RunResult r = run(binary + " sweep --scenario " + bad.string() + " --out " +
                                    csv.string(),
                                work);
        expect(r.exit_code == 2, "invalid scenario exits 2");
        expect(r.err.find("spacing") != std::string::npos,
               "diagnostic names the offending key");
        expect(!fs::exists(csv), "invalid scenario leaves no output file");
    }

    {
        const RunResult r = run(binary + " sweep --scenario " + scenario + " --bogus", work);
        expect(r.exit_code != 0, "unknown flag is a usage error");
        const RunResult r2 = run(binary + " --version", work);
        expect(r2.exit_code == 0, "--version exits 0");
    }

    {
        // DIRSIM_OUT_DIR supplies the default output location.
        const fs::path out_dir = work / "env_out";
        const RunResult r = run("DIRSIM_OUT_DIR=" + out_dir.string() + " " + binary +
                                    " doubling --scenario " + scenario + " --k 8",
                                work);
        expect(r.exit_code == 0, "doubling with DIRSIM_OUT_DIR exits 0");
        expect(fs::exists(out_dir / "doubling.csv"),
               "default output lands in DIRSIM_OUT_DIR");
        expect(fs::exists(out_dir / "doubling.csv.manifest.json"),
               "manifest lands next to the CSV");
    }

    fs::remove_all(work);
    if (g_failures == 0) {
        std::cout << "cli_test: all checks passed\n";
        return 0;
    }
    std::cerr << "cli_test: " << g_failures << " checks failed\n";
    return 1;
}
