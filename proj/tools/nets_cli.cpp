// Command-line surface for the nets-of-conics classifier library: classify
// single inputs, reproduce the catalog verification suite, run Grassmannian
// sweeps and emit random nets. All reports are deterministic for fixed flags
// and seed.

#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "cnets/io.hpp"
#include "cnets/verify.hpp"

namespace {

using namespace cnets;
using gf::i64;

// Every domain error maps to its own exit code (documented in --help).
int exit_code_for(const std::exception& e) {
    if (dynamic_cast<const ParseError*>(&e)) return 2;
    if (dynamic_cast<const CompositeModulus*>(&e)) return 3;
    if (dynamic_cast<const SmallCharacteristic*>(&e)) return 4;
    if (dynamic_cast<const DivisionByZero*>(&e)) return 5;
    if (dynamic_cast<const ZeroForm*>(&e)) return 6;
    if (dynamic_cast<const NonReducedInput*>(&e)) return 7;
    if (dynamic_cast<const JUndefined*>(&e)) return 8;
    if (dynamic_cast<const UnrecognizedPencil*>(&e)) return 9;
    if (dynamic_cast<const SingularMatrix*>(&e)) return 10;
    if (dynamic_cast<const ImpossibleDiscriminant*>(&e)) return 11;
    if (dynamic_cast<const WrongHilbert*>(&e)) return 12;
    if (dynamic_cast<const NotLocal*>(&e)) return 13;
    if (dynamic_cast<const CharacteristicObstruction*>(&e)) return 14;
    if (dynamic_cast<const NotType33*>(&e)) return 15;
    if (dynamic_cast<const UnsupportedField*>(&e)) return 16;
    if (dynamic_cast<const ConsistencyFailure*>(&e)) return 17;
    if (dynamic_cast<const IrreducibleSearchFailed*>(&e)) return 18;
    if (dynamic_cast<const InvalidMultTable*>(&e)) return 12;
    if (dynamic_cast<const std::invalid_argument*>(&e)) return 19;
    return 20;
}

constexpr const char* kExitCodeHelp = R"(exit codes:
  0   success
  1   verification failures (FAIL records present)
  2   ParseError            3   CompositeModulus
  4   SmallCharacteristic   5   DivisionByZero
  6   ZeroForm              7   NonReducedInput
  8   JUndefined            9   UnrecognizedPencil
  10  SingularMatrix        11  ImpossibleDiscriminant
  12  WrongHilbert / InvalidMultTable
  13  NotLocal              14  CharacteristicObstruction
  15  NotType33             16  UnsupportedField
  17  ConsistencyFailure    18  IrreducibleSearchFailed
  19  invalid usage         20  other error
)";

void print_cubic(std::ostream& os, const char* name, const forms::TernaryCubic& f) {
    os << name;
    for (const auto& c : f.c) os << " " << c.c[0];
    os << "\n";
}

int cmd_classify(const std::string& path, i64 prime_override) {
    io::InputObject obj = io::parse_input_file(path);
    i64 p = prime_override > 0 ? prime_override : obj.p;
    auto F = gf::FieldCtx::make_all(p);
    std::ostream& os = std::cout;
    if (obj.kind == "net") {
        auto W = io::net_from_input(F, obj);
        auto disc = nets::net_disc(F, W);
        auto slice = nets::net_slice(F, W);
        os << "kind net\np " << p << "\n";
        os << "label " << nets::to_string(nets::classify_net(F, W)) << "\n";
        print_cubic(os, "disc", disc);
        os << "disc_type " << taxonomy::to_string(taxonomy::classify_cubic(F, disc)) << "\n";
        print_cubic(os, "slice", slice);
        os << "slice_type " << taxonomy::to_string(taxonomy::classify_cubic(F, slice)) << "\n";
        os << "rank_one " << (nets::has_rank_one(F, W) ? "true" : "false") << "\n";
    } else if (obj.kind == "pencil") {
        auto U = io::pencil_from_input(F, obj);
        auto disc = pencils::pencil_disc(F, U);
        os << "kind pencil\np " << p << "\n";
        os << "label " << pencils::to_string(pencils::classify_pencil(F, U)) << "\n";
        os << "disc";
        for (const auto& c : disc.c) os << " " << c.c[0];
        os << "\n";
        auto v = pencils::pencil_invariants(F, U);
        os << "disc_zero " << (v.disc_zero ? "true" : "false") << "\n";
        os << "profile";
        for (int m : v.profile) os << " " << m;
        os << "\n";
        os << "rank_one_points " << v.rank_one_points << "\n";
        os << "common_kernel " << (v.common_kernel ? "true" : "false") << "\n";
    } else if (obj.kind == "ideal") {
        auto T = algebras::quotient_algebra(F, io::generators_from_input(obj));
        os << "kind ideal\np " << p << "\n";
        auto h = algebras::hilbert_vector(F, T);
        os << "hilbert";
        for (int d : h.d) os << " " << d;
        os << "\n";
        os << "label " << nets::to_string(algebras::classify_algebra(F, T)) << "\n";
    } else {
        auto T = io::multtable_from_input(F, obj);
        os << "kind multtable\np " << p << "\n";
        auto h = algebras::hilbert_vector(F, T);
        os << "hilbert";
        for (int d : h.d) os << " " << d;
        os << "\n";
        os << "label " << nets::to_string(algebras::classify_algebra(F, T)) << "\n";
    }
    return 0;
}

int cmd_verify_tables(i64 p) {
    auto records = verify::verify_tables(p);
    io::print_records(std::cout, records);
    int fails = io::count_failures(records);
    std::cout << "summary pass=" << (records.size() - fails - io::count_warnings(records))
              << " fail=" << fails << " warn=" << io::count_warnings(records) << "\n";
    return fails == 0 ? 0 : 1;
}

int cmd_sweep(const std::string& kind, const std::string& mode, std::uint64_t count,
              std::uint64_t seed, int workers) {
    auto F = gf::FieldCtx::make_all(5);
    oracle::OrbitCensus census;
    if (mode == "full") {
        census = kind == "pencil" ? oracle::full_sweep_pencils(F, workers)
                                  : oracle::full_sweep_nets(F, workers);
    } else {
        if (kind == "pencil") throw std::invalid_argument("sample mode supports nets only");
        census = oracle::sample_sweep_nets(F, count, seed);
    }
    std::cout << io::render_census(census);
    return 0;
}

int cmd_random(std::uint64_t count, std::uint64_t seed, i64 p, const std::string& out_path) {
    auto F = gf::FieldCtx::make_all(p);
    std::ofstream out(out_path);
    if (!out) throw ParseError("cannot open output file " + out_path);
    for (std::uint64_t i = 0; i < count; ++i)
        out << io::to_json(io::input_from_net(nets::random_net(F, seed + i))) << "\n";
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact classifier for nets and pencils of conics over small prime fields,\n"
                 "with the associated rank-7 local algebras."};
    app.footer(kExitCodeHelp);
    app.require_subcommand(1);

    std::string path, kind = "net", mode = "full", out_path;
    i64 prime = 0, prime_v = 5, prime_r = 5;
    std::uint64_t count = 0, seed = 1, rcount = 1, rseed = 1;
    int workers = 1;

    auto* classify = app.add_subcommand("classify", "classify a net/pencil/ideal/multtable file");
    classify->add_option("file", path, "input JSON document")->required();
    classify->add_option("--prime", prime, "override the prime of the input file");

    auto* verify_cmd = app.add_subcommand("verify-tables", "reproduce the catalog verification suite");
    verify_cmd->add_option("--prime", prime_v, "prime field to verify over (>= 5)");

    auto* sweep = app.add_subcommand("sweep", "classify subspaces of Sym2(3) over F_5 en masse");
    sweep->add_option("--kind", kind, "net or pencil")->check(CLI::IsMember({"net", "pencil"}));
    sweep->add_option("--mode", mode, "full or sample")->check(CLI::IsMember({"full", "sample"}));
    sweep->add_option("--count", count, "sample size for sample mode");
    sweep->add_option("--seed", seed, "sample seed");
    sweep->add_option("--workers", workers, "worker threads for full sweeps");

    auto* random_cmd = app.add_subcommand("random", "emit random nets as JSON lines");
    random_cmd->add_option("--count", rcount, "number of nets");
    random_cmd->add_option("--seed", rseed, "base seed");
    random_cmd->add_option("--prime", prime_r, "prime field");
    random_cmd->add_option("--out", out_path, "output file")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : 19;
    }

    try {
        if (classify->parsed()) return cmd_classify(path, prime);
        if (verify_cmd->parsed()) return cmd_verify_tables(prime_v);
        if (sweep->parsed()) return cmd_sweep(kind, mode, count, seed, workers);
        if (random_cmd->parsed()) return cmd_random(rcount, rseed, prime_r, out_path);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_code_for(e);
    }
    return 19;
}
