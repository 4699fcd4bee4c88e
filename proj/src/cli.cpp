#include "grcone/cli.hpp"

#include "grcone/bundle.hpp"
#include "grcone/certificate.hpp"
#include "grcone/cone.hpp"
#include "grcone/errors.hpp"
#include "grcone/io.hpp"
#include "grcone/oracle.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

namespace grcone::cli {

namespace {

std::string read_source(const std::string& path) {
    std::ostringstream buffer;
    if (path == "-") {
        buffer << std::cin.rdbuf();
    } else {
        std::ifstream file(path);
        if (!file)
            throw Error("cannot open file: " + path);
        buffer << file.rdbuf();
    }
    return buffer.str();
}

io::InputDocument load_document(const std::string& path) {
    return io::parse_input(read_source(path));
}

BundleDescriptor load_bundle(const std::string& path) {
    io::InputDocument doc = load_document(path);
    return doc.bundle();
}

CoverModel load_cover(const std::string& path) {
    io::InputDocument doc = load_document(path);
    return doc.cover();
}

/// Bundles admitting certificates: strong HN data, or a split bundle in
/// prime characteristic (already strongly semistable blockwise, delta = 0).
StrongHNData to_strong(const BundleDescriptor& b) {
    if (b.is_strong())
        return b.as_strong().data;
    if (b.is_split()) {
        const auto& s = b.as_split();
        if (s.characteristic == 0)
            throw ValidationError(
                "certificates need positive characteristic; this split bundle has characteristic 0");
        return StrongHNData(s.characteristic, 0, hn_of_split(s.bundle));
    }
    throw ValidationError(
        "certificates need a strong_hn document or a split document with prime characteristic");
}

std::string tuple_text(const std::vector<Int>& values) {
    std::string out = "(";
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (i > 0)
            out += ",";
        out += values[i].str();
    }
    out += ")";
    return out;
}

std::string blocks_text(const HNType& hn) {
    std::string out = "[";
    for (std::size_t i = 0; i < hn.blocks().size(); ++i) {
        if (i > 0)
            out += ", ";
        out += "(" + std::to_string(hn.blocks()[i].rank) + "," + hn.blocks()[i].degree.str() + ")";
    }
    out += "]";
    return out;
}

std::string ray_text(const Ray& ray) {
    return "(" + ray.eta().str() + "," + ray.fiber().str() + ")";
}

void row(std::ostream& out, const std::string& label, const std::string& value) {
    out << std::left << std::setw(20) << label << value << "\n";
}

void print_oracle_text(std::ostream& out, const OracleReport& rep) {
    row(out, "r:", std::to_string(rep.r));
    row(out, "lambda (formula):", format_rational(rep.lambda_formula));
    row(out, "lambda (oracle):", format_rational(rep.lambda_oracle));
    row(out, "h0 at boundary:", rep.h0_at_boundary.str());
    row(out, "h0 beyond boundary:", rep.h0_beyond_boundary.str());
    row(out, "verdict:", rep.verdict ? "pass" : "FAIL");
}

void print_certificate_text(std::ostream& out, const EffectivityCertificate& cert) {
    row(out, "r:", std::to_string(cert.r));
    row(out, "ell:", std::to_string(cert.ell));
    row(out, "n:", std::to_string(cert.n));
    row(out, "selected exponents:", tuple_text(cert.selected_exponents));
    row(out, "tilde L degree:", cert.tilde_l_degree.str());
    row(out, "total map degree:", cert.total_map_degree.str());
    row(out, "summand:", cert.checks.summand_ok ? "ok" : "FAILED");
    row(out, "degree identity:", cert.checks.degree_identity_ok ? "ok" : "FAILED");
    row(out, "pullback identity:", cert.checks.pullback_identity_ok ? "ok" : "FAILED");
}

struct Invocation {
    std::string format = "text";
    std::string input;
    std::string cover;
    std::string certificate;
    int r = 1;
    int j = 1;
    bool cross_check = false;

    bool json() const { return format == "json"; }
};

int dispatch(const std::string& command, const Invocation& a, std::ostream& out,
             std::ostream& err) {
    if (command == "hn") {
        const BundleDescriptor& b = load_bundle(a.input);
        BundleDescriptor result = [&] {
            if (!b.is_split())
                return b;
            const auto& s = b.as_split();
            HNType hn = hn_of_split(s.bundle);
            if (s.characteristic == 0)
                return BundleDescriptor::char_zero(std::move(hn));
            // Split blocks are strongly semistable, so the filtration is
            // already stable: delta = 0.
            return BundleDescriptor::strong(StrongHNData(s.characteristic, 0, std::move(hn)));
        }();
        if (a.json()) {
            out << io::dump_document(io::to_json(result));
        } else {
            const HNType& hn =
                result.is_char_zero() ? result.as_char_zero().hn : result.as_strong().data.hn();
            out << blocks_text(hn) << "\n";
        }
        return 0;
    }

    if (command == "lambda") {
        const Rational value = load_bundle(a.input).lambda(a.r);
        if (a.json())
            out << io::dump_document(io::lambda_document(a.r, value));
        else
            out << format_rational(value) << "\n";
        return 0;
    }

    if (command == "cone") {
        const Cone2D cone = pseff_cone(load_bundle(a.input), a.r);
        if (a.json())
            out << io::dump_document(io::cone_document(cone, a.r));
        else
            out << ray_text(cone.ray_a()) << "\n" << ray_text(cone.ray_b()) << "\n";
        return 0;
    }

    if (command == "frobenius" || command == "dual" || command == "wedge") {
        const BundleDescriptor& b = load_bundle(a.input);
        if (!b.is_split())
            throw ValidationError(command + " needs a split document");
        const auto& s = b.as_split();
        SplitBundle result = [&] {
            if (command == "frobenius")
                return frobenius_split(s.bundle, s.characteristic, a.j);
            if (command == "dual")
                return dual_split(s.bundle);
            return exterior_power_split(s.bundle, a.r);
        }();
        if (a.json())
            out << io::dump_document(
                io::to_json(BundleDescriptor::split(std::move(result), s.characteristic)));
        else
            out << tuple_text(result.exponents()) << "\n";
        return 0;
    }

    if (command == "shift") {
        const BundleDescriptor& b = load_bundle(a.input);
        if (!b.is_strong())
            throw ValidationError("shift needs a strong_hn document");
        StrongHNData result = shift_strong(b.as_strong().data, a.j);
        if (a.json()) {
            out << io::dump_document(io::to_json(BundleDescriptor::strong(std::move(result))));
        } else {
            out << "p=" << result.characteristic().str() << " delta=" << result.delta()
                << " blocks=" << blocks_text(result.hn()) << "\n";
        }
        return 0;
    }

    if (command == "oracle") {
        const BundleDescriptor& b = load_bundle(a.input);
        if (!b.is_split())
            throw ValidationError("oracle needs a split document");
        const OracleReport rep = verify_theorem_split(b.as_split().bundle, a.r);
        if (a.json())
            out << io::dump_document(io::to_json(rep));
        else
            print_oracle_text(out, rep);
        return rep.verdict ? 0 : 2;
    }

    if (command == "certify") {
        const StrongHNData data = to_strong(load_bundle(a.input));
        const CoverModel cover = load_cover(a.cover);
        const EffectivityCertificate cert = build_certificate(data, cover, a.r);

        bool cross_ok = true;
        if (a.cross_check) {
            // Independent confirmation upstairs: the pulled-back bundle is
            // split with exponents scaled by the l degree, and its boundary
            // slope must land exactly on deg(L~).
            std::vector<Int> scaled;
            scaled.reserve(cover.exponents().exponents().size());
            for (const Int& x : cover.exponents().exponents())
                scaled.push_back(cover.l_degree() * x);
            const OracleReport rep = verify_theorem_split(SplitBundle(std::move(scaled)), a.r);
            cross_ok = rep.verdict && rep.lambda_oracle == Rational(cert.tilde_l_degree);
        }

        if (a.json()) {
            out << io::dump_document(io::to_json(cert));
            if (a.cross_check && !cross_ok)
                err << "cross-check failed: the oracle disagrees with the certificate\n";
        } else {
            print_certificate_text(out, cert);
            if (a.cross_check)
                row(out, "cross-check:", cross_ok ? "pass" : "FAIL");
        }
        return cert.checks.all() && cross_ok ? 0 : 2;
    }

    if (command == "verify") {
        const EffectivityCertificate cert = io::parse_certificate(read_source(a.certificate));
        const StrongHNData data = to_strong(load_bundle(a.input));
        const CoverModel cover = load_cover(a.cover);
        const bool valid = verify_certificate(cert, data, cover);
        if (a.json())
            out << io::dump_document(io::verification_document(valid));
        else
            out << (valid ? "valid" : "INVALID") << "\n";
        return valid ? 0 : 2;
    }

    err << "error: unknown command: " << command << "\n";
    return 1;
}

} // namespace

int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact cone computations for Grassmann bundles over curves", "grcone"};
    app.require_subcommand(1);
    app.footer("Exit status: 0 success, 1 parse or validation error, 2 verification failure.");

    Invocation a;
    app.add_option("--format", a.format, "Output format: text or json")
        ->check(CLI::IsMember({"text", "json"}))
        ->capture_default_str();

    auto add_command = [&](const std::string& name, const std::string& description,
                           bool with_input = true) {
        CLI::App* sub = app.add_subcommand(name, description);
        sub->fallthrough();
        if (with_input)
            sub->add_option("--input,-i", a.input, "Input document (JSON file, or - for stdin)")
                ->required();
        return sub;
    };
    auto with_rank = [&](CLI::App* sub) {
        sub->add_option("-r,--rank", a.r, "Rank of the quotient")->required();
        return sub;
    };
    auto with_steps = [&](CLI::App* sub) {
        sub->add_option("-j,--steps", a.j, "Number of iterations")->required();
        return sub;
    };

    add_command("hn", "Harder-Narasimhan type of the bundle");
    with_rank(add_command("lambda", "Boundary slope of the rank-r quotient Grassmannian"));
    with_rank(add_command("cone", "Extremal rays of the pseudo-effective cone"));
    with_steps(add_command("frobenius", "Frobenius pullback of a split bundle"));
    with_steps(add_command("shift", "Re-present strong HN data at a later stabilization step"));
    add_command("dual", "Dual of a split bundle");
    with_rank(add_command("wedge", "Exterior power of a split bundle"));
    with_rank(add_command("oracle", "Brute-force effectivity check for a split bundle"));

    CLI::App* certify =
        with_rank(add_command("certify", "Build an effectivity certificate for the cone boundary"));
    certify->add_option("--cover", a.cover, "Cover document (JSON file, or - for stdin)")
        ->required();
    certify->add_flag("--cross-check", a.cross_check,
                      "Also confirm the certificate against the brute-force oracle");

    CLI::App* verify =
        add_command("verify", "Check a certificate against bundle and cover", false);
    verify->add_option("--certificate", a.certificate, "Certificate document (JSON file)")
        ->required();
    verify->add_option("--input,-i", a.input, "Bundle document (JSON file, or - for stdin)")
        ->required();
    verify->add_option("--cover", a.cover, "Cover document (JSON file, or - for stdin)")
        ->required();

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(std::move(reversed));
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? 0 : 1;
    }

    try {
        return dispatch(app.get_subcommands().front()->get_name(), a, out, err);
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
}

} // namespace grcone::cli
