//   Copyright 2026 The Eclipse Query Authors
//
//   Licensed under the Apache License, Version 2.0 (the "License");
//   you may not use this file except in compliance with the License.
//   You may obtain a copy of the License at
//
//       http://www.apache.org/licenses/LICENSE-2.0
//
//   Unless required by applicable law or agreed to in writing, software
//   distributed under the License is distributed on an "AS IS" BASIS,
//   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
//   See the License for the specific language governing permissions and
//   limitations under the License.

// eclipse: skyline, top-1 and Eclipse queries over CSV point files.
//
//   eclipse query    --input data.csv [--header] --semantics S [--ratios ...]
//                    [--box lo:hi,...] [--algo A] [--grid G] [--output json|csv] [--first]
//   eclipse serve    --input data.csv [--header] [--host H] [--port P] [--static DIR]
//   eclipse bench    --input data.csv [--header] [--requests reqs.json] [--repetitions R]
//   eclipse generate --n N --dim D [--seed S] [--lo A] [--hi B] [--output file] [--header]
//
// Exit codes: 0 success, 2 usage error, 3 data error.

#include <charconv>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>
#include <spdlog/spdlog.h>

#include "eclipse/service/bench.hpp"
#include "eclipse/service/csv.hpp"
#include "eclipse/service/log.hpp"
#include "eclipse/service/request.hpp"
#include "eclipse/service/server.hpp"

namespace {

using namespace eclipse;
using namespace eclipse::service;

constexpr int kExitUsage = 2;
constexpr int kExitData = 3;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

double parse_number(std::string_view s, const std::string& what) {
    double v = 0;
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (s.empty() || ec != std::errc() || ptr != s.data() + s.size())
        throw UsageError("cannot parse '" + std::string(s) + "' in " + what);
    return v;
}

std::vector<std::string_view> split(std::string_view s, char sep) {
    std::vector<std::string_view> parts;
    std::size_t start = 0;
    while (true) {
        const auto pos = s.find(sep, start);
        parts.push_back(s.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start));
        if (pos == std::string_view::npos)
            return parts;
        start = pos + 1;
    }
}

std::vector<double> parse_ratios(const std::string& arg) {
    std::vector<double> out;
    for (auto part : split(arg, ','))
        out.push_back(parse_number(part, "--ratios"));
    return out;
}

std::vector<std::pair<double, double>> parse_box(const std::string& arg) {
    std::vector<std::pair<double, double>> out;
    for (auto part : split(arg, ',')) {
        const auto bounds = split(part, ':');
        if (bounds.size() != 2)
            throw UsageError("box entries must look like lo:hi, got '" + std::string(part) + "'");
        out.emplace_back(parse_number(bounds[0], "--box"), parse_number(bounds[1], "--box"));
    }
    return out;
}

struct InputOptions {
    std::string path;
    bool header = false;
};

void add_input(CLI::App* cmd, InputOptions& in) {
    cmd->add_option("--input,-i", in.path, "CSV file, one point per line")->required();
    cmd->add_flag("--header", in.header, "Skip the first line");
}

Data load(const InputOptions& in) { return parse_csv_file(in.path, in.header); }

struct QueryOptions {
    InputOptions input;
    std::string semantics;
    std::string ratios;
    std::string box;
    std::string algo = "auto";
    std::optional<int> grid;
    std::string output = "json";
    bool first = false;
};

int run_query_command(const QueryOptions& opt) {
    const auto sem = parse_semantics(opt.semantics);
    if (!sem)
        throw UsageError("unknown semantics '" + opt.semantics + "'");
    const auto algo = parse_algorithm(opt.algo);
    if (!algo)
        throw UsageError("unknown algorithm '" + opt.algo + "'");

    QueryRequest req;
    req.semantics = *sem;
    req.algorithm = *algo;
    req.grid = opt.grid;
    if (!opt.ratios.empty())
        req.ratios = parse_ratios(opt.ratios);
    if (!opt.box.empty())
        req.box = parse_box(opt.box);

    const Data data = load(opt.input);
    auto resp = run_query(data, req);
    if (opt.first && resp.ids.size() > 1) {
        resp.ids.resize(1);
        resp.points.resize(1);
        std::erase_if(resp.witnesses, [&](const auto& kv) { return kv.first != resp.ids.front(); });
    }

    if (opt.output == "csv") {
        std::cout << "id";
        for (Eigen::Index j = 0; j < data.dim(); ++j)
            std::cout << ",x" << (j + 1);
        std::cout << '\n';
        for (std::size_t k = 0; k < resp.ids.size(); ++k) {
            std::cout << resp.ids[k];
            for (double v : resp.points[k])
                std::cout << ',' << format_double(v);
            std::cout << '\n';
        }
    } else {
        std::cout << to_json(resp).dump() << '\n';
    }
    return 0;
}

struct ServeOptions {
    InputOptions input;
    std::string host = "127.0.0.1";
    int port = 8080;
    std::string static_dir;
};

int run_serve_command(const ServeOptions& opt) {
    ServerOptions so;
    so.host = opt.host;
    so.port = opt.port;
    if (!opt.static_dir.empty())
        so.static_dir = opt.static_dir;
    serve(load(opt.input), so);
    return 0;
}

struct BenchOptions {
    InputOptions input;
    std::string requests;
    int repetitions = 5;
};

int run_bench_command(const BenchOptions& opt) {
    const Data data = load(opt.input);
    std::vector<QueryRequest> reqs;
    if (opt.requests.empty()) {
        reqs = default_bench_requests(data.dim());
    } else {
        std::ifstream in(opt.requests);
        if (!in)
            throw UsageError("cannot open '" + opt.requests + "'");
        nlohmann::json j;
        try {
            in >> j;
        } catch (const nlohmann::json::exception& e) {
            throw UsageError(std::string("bad requests file: ") + e.what());
        }
        reqs = requests_from_json(j);
    }
    write_bench_csv(std::cout, bench(data, reqs, opt.repetitions));
    return 0;
}

struct GenerateOptions {
    std::size_t n = 1000;
    int dim = 2;
    std::uint64_t seed = 1;
    double lo = 0.0;
    double hi = 100.0;
    std::string output;
    bool header = false;
};

int run_generate_command(const GenerateOptions& opt) {
    if (opt.n == 0 || opt.dim < 2 || !(opt.lo < opt.hi))
        throw UsageError("need n >= 1, dim >= 2 and lo < hi");
    std::mt19937_64 rng(opt.seed);
    std::uniform_real_distribution<double> coord(opt.lo, opt.hi);
    PointMatrix<double> m(static_cast<Eigen::Index>(opt.n), opt.dim);
    for (Eigen::Index i = 0; i < m.rows(); ++i)
        for (Eigen::Index j = 0; j < m.cols(); ++j)
            m(i, j) = coord(rng);
    const auto data = Data::from_matrix(std::move(m));
    if (opt.output.empty()) {
        emit_csv(std::cout, data, opt.header);
    } else {
        std::ofstream out(opt.output);
        if (!out)
            throw Error(Errc::Io, "cannot write '" + opt.output + "'");
        emit_csv(out, data, opt.header);
    }
    return 0;
}

int exit_code_for(const Error& e) {
    switch (e.code()) {
    case Errc::InvalidRequest:
    case Errc::InvalidRatio:
    case Errc::InvalidBox:
    case Errc::BadGrid:
    case Errc::BadInterval:
    case Errc::NonPositiveT:
    case Errc::PortInUse:
        return kExitUsage;
    default:
        return kExitData;
    }
}

} // namespace

int main(int argc, char** argv) {
    std::locale::global(std::locale::classic());
    init_logging();

    CLI::App app{"Skyline, top-1 and Eclipse queries over point datasets"};
    app.require_subcommand(1);

    QueryOptions qopt;
    auto* query = app.add_subcommand("query", "Run one query and print the result");
    add_input(query, qopt.input);
    query->add_option("--semantics,-s", qopt.semantics, "skyline | top1 | eclipse-dominance | eclipse-envelope")
        ->required();
    query->add_option("--ratios", qopt.ratios, "t2,t3,... for top1");
    query->add_option("--box", qopt.box, "lo2:hi2,lo3:hi3,... for eclipse queries");
    query->add_option("--algo", qopt.algo, "auto | bruteforce | prefilter | dual2d | sampled");
    query->add_option("--grid", qopt.grid, "Grid points per ratio for the sampled envelope");
    query->add_option("--output,-o", qopt.output, "json | csv")->check(CLI::IsMember({"json", "csv"}));
    query->add_flag("--first", qopt.first, "Keep only the lowest id");

    ServeOptions sopt;
    auto* serve_cmd = app.add_subcommand("serve", "Serve the JSON query API over HTTP");
    add_input(serve_cmd, sopt.input);
    serve_cmd->add_option("--host", sopt.host, "Address to bind");
    serve_cmd->add_option("--port,-p", sopt.port, "Port to bind (0 picks a free one)");
    serve_cmd->add_option("--static", sopt.static_dir, "Directory served at / (explorer assets)");

    BenchOptions bopt;
    auto* bench_cmd = app.add_subcommand("bench", "Time requests and print a CSV table");
    add_input(bench_cmd, bopt.input);
    bench_cmd->add_option("--requests", bopt.requests, "JSON array of query requests");
    bench_cmd->add_option("--repetitions,-r", bopt.repetitions, "Timed runs per request")
        ->check(CLI::PositiveNumber);

    GenerateOptions gopt;
    auto* gen = app.add_subcommand("generate", "Write uniformly random points as CSV");
    gen->add_option("--n", gopt.n, "Number of points");
    gen->add_option("--dim", gopt.dim, "Dimension");
    gen->add_option("--seed", gopt.seed, "Random seed");
    gen->add_option("--lo", gopt.lo, "Lower coordinate bound");
    gen->add_option("--hi", gopt.hi, "Upper coordinate bound");
    gen->add_option("--output,-o", gopt.output, "Output file (default stdout)");
    gen->add_flag("--header", gopt.header, "Write an x1,x2,... header line");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (*query)
            return run_query_command(qopt);
        if (*serve_cmd)
            return run_serve_command(sopt);
        if (*bench_cmd)
            return run_bench_command(bopt);
        if (*gen)
            return run_generate_command(gopt);
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return exit_code_for(e);
    }
    return kExitUsage;
}
