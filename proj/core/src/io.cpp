#include "rr/io.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <map>
#include <sstream>

#include "rr/errors.hpp"

namespace rr {

namespace {

// Seed of the deterministic rng used for the singular-locus cross-check
// while parsing; fixed so that parsing a file is reproducible.
constexpr std::uint64_t kCurveCheckSeed = 1;

std::string trim(const std::string& s) {
    std::size_t b = 0, e = s.size();
    while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
    while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
    return s.substr(b, e - b);
}

struct Section {
    std::string name;
    std::vector<std::string> lines;
};

std::vector<Section> read_sections(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open file: " + path);
    std::vector<Section> sections;
    std::string raw;
    std::size_t lineno = 0;
    while (std::getline(in, raw)) {
        ++lineno;
        auto hash = raw.find('#');
        if (hash != std::string::npos) raw.erase(hash);
        std::string line = trim(raw);
        if (line.empty()) continue;
        if (line.front() == '[') {
            if (line.back() != ']')
                throw ParseError(path + ":" + std::to_string(lineno) +
                                 ": malformed section header");
            sections.push_back(Section{line.substr(1, line.size() - 2), {}});
        } else {
            if (sections.empty())
                throw ParseError(path + ":" + std::to_string(lineno) +
                                 ": content before any [section]");
            sections.back().lines.push_back(line);
        }
    }
    return sections;
}

const Section* find_section(const std::vector<Section>& sections,
                            const std::string& name) {
    for (const auto& s : sections)
        if (s.name == name) return &s;
    return nullptr;
}

std::map<std::string, std::string> key_values(const Section& s,
                                              const std::string& path) {
    std::map<std::string, std::string> kv;
    for (const auto& line : s.lines) {
        auto eq = line.find('=');
        if (eq == std::string::npos)
            throw ParseError(path + ": [" + s.name +
                             "]: expected key=value, got \"" + line + "\"");
        std::string k = trim(line.substr(0, eq));
        if (kv.count(k))
            throw ParseError(path + ": [" + s.name + "]: duplicate key " + k);
        kv[k] = trim(line.substr(eq + 1));
    }
    return kv;
}

std::uint64_t parse_u64(const std::string& text, const std::string& what) {
    try {
        std::size_t pos = 0;
        unsigned long long v = std::stoull(text, &pos);
        if (pos != text.size()) throw std::invalid_argument(text);
        return v;
    } catch (const std::exception&) {
        throw ParseError("invalid unsigned integer for " + what + ": \"" +
                         text + "\"");
    }
}

long long parse_i64(const std::string& text, const std::string& what) {
    try {
        std::size_t pos = 0;
        long long v = std::stoll(text, &pos);
        if (pos != text.size()) throw std::invalid_argument(text);
        return v;
    } catch (const std::exception&) {
        throw ParseError("invalid integer for " + what + ": \"" + text +
                         "\"");
    }
}

const std::string& require_key(const std::map<std::string, std::string>& kv,
                               const std::string& key,
                               const std::string& context) {
    auto it = kv.find(key);
    if (it == kv.end())
        throw ParseError(context + ": missing key \"" + key + "\"");
    return it->second;
}

SmoothDivisor parse_divisor_section(const Field& F, const Section& s,
                                    const std::string& path) {
    auto kv = key_values(s, path);
    std::string ctx = path + ": [" + s.name + "]";
    SmoothDivisor D;
    D.lambda = parse_u64(require_key(kv, "lambda", ctx), "lambda") % F.p();
    D.chi = up::parse(F, require_key(kv, "chi", ctx));
    D.u = up::parse(F, require_key(kv, "u", ctx));
    D.v = up::parse(F, require_key(kv, "v", ctx));
    return D;
}

}  // namespace

Curve parse_curve_file(const std::string& path) {
    auto sections = read_sections(path);
    const Section* fs = find_section(sections, "field");
    if (!fs) throw ParseError(path + ": missing [field] section");
    auto fkv = key_values(*fs, path);
    Field F(parse_u64(require_key(fkv, "p", path + ": [field]"), "p"));

    const Section* cs = find_section(sections, "curve");
    if (!cs) throw ParseError(path + ": missing [curve] section");
    std::vector<BiTerm> terms;
    for (const auto& line : cs->lines) {
        std::istringstream is(line);
        std::string si, sj, sc, extra;
        if (!(is >> si >> sj >> sc) || (is >> extra))
            throw ParseError(path + ": [curve]: expected \"i j c\", got \"" +
                             line + "\"");
        std::uint64_t i = parse_u64(si, "X-exponent");
        std::uint64_t j = parse_u64(sj, "Y-exponent");
        long long c = parse_i64(sc, "coefficient");
        terms.push_back(BiTerm{static_cast<std::uint32_t>(i),
                               static_cast<std::uint32_t>(j), F.from_int(c)});
    }
    BiPoly q = bp::normalize(F, std::move(terms));

    NodalDivisor block;
    const Section* ns = find_section(sections, "nodal");
    if (ns && !ns->lines.empty()) {
        auto kv = key_values(*ns, path);
        std::string ctx = path + ": [nodal]";
        block.lambda = parse_u64(require_key(kv, "lambda", ctx), "lambda") % F.p();
        block.chi = up::parse(F, require_key(kv, "chi", ctx));
        block.u = up::parse(F, require_key(kv, "u", ctx));
        block.v = up::parse(F, require_key(kv, "v", ctx));
        if (kv.count("T_E"))
            block.tangent_poly = up::parse(F, kv.at("T_E"));
        else
            block.tangent_poly = compute_tangent_poly(F, q, block);
    }
    Curve C = make_curve(F, q, block);

    // Cross-check the declared singular locus against a fresh computation:
    // the file must list exactly the curve's nodes.
    Rng check_rng(kCurveCheckSeed);
    RandomConfig check_cfg;
    NodalDivisor computed = nodal_precompute(F, q, check_rng, check_cfg);
    int r_file = up::deg(C.nodes.chi);
    int r_real = up::deg(computed.chi);
    if (r_file != r_real)
        throw ValidationError(
            path + ": [nodal] lists " + std::to_string(std::max(r_file, 0)) +
            " node(s) but the curve has " + std::to_string(std::max(r_real, 0)));
    if (r_real > 0) {
        SmoothDivisor a{C.nodes.lambda, C.nodes.chi, C.nodes.u, C.nodes.v};
        SmoothDivisor b{computed.lambda, computed.chi, computed.u, computed.v};
        if (!equal_divisors(C, a, b))
            throw ValidationError(
                path + ": [nodal] does not match the curve's singular locus");
    }
    return C;
}

SmoothDivisor parse_divisor_file(const std::string& path, const Curve& C,
                                 DivisorRole role) {
    auto sections = read_sections(path);
    const Section* s = nullptr;
    switch (role) {
        case DivisorRole::plus:
            s = find_section(sections, "divisor+");
            if (!s) s = find_section(sections, "divisor");
            break;
        case DivisorRole::minus:
            s = find_section(sections, "divisor-");
            if (!s) s = find_section(sections, "divisor");
            break;
        case DivisorRole::any:
            s = find_section(sections, "divisor");
            if (!s) s = find_section(sections, "divisor+");
            if (!s) s = find_section(sections, "divisor-");
            break;
    }
    if (!s) throw ParseError(path + ": no divisor section found");
    SmoothDivisor D = parse_divisor_section(C.F, *s, path);
    if (auto why = validate_divisor(C, D))
        throw ValidationError(path + ": [" + s->name + "]: " + *why);
    return D;
}

std::string divisor_block_text(const SmoothDivisor& D,
                               const std::string& section) {
    std::ostringstream os;
    os << '[' << section << "]\n";
    os << "lambda=" << D.lambda << '\n';
    os << "chi=" << up::to_string(D.chi) << '\n';
    os << "u=" << up::to_string(D.u) << '\n';
    os << "v=" << up::to_string(D.v) << '\n';
    return os.str();
}

void write_divisor_file(const std::string& path, const SmoothDivisor& D,
                        const std::string& section,
                        const std::vector<std::string>& header_comments) {
    std::ofstream out(path);
    if (!out) throw Error("cannot write file: " + path);
    for (const auto& h : header_comments) out << "# " << h << '\n';
    out << divisor_block_text(D, section);
    if (!out) throw Error("write failed: " + path);
}

std::string basis_file_text(const RRBasis& basis,
                            const std::vector<std::string>& header_comments) {
    std::ostringstream os;
    for (const auto& h : header_comments) os << "# " << h << '\n';
    os << "[h]\n" << bp::to_string(basis.h);
    for (const auto& b : basis.numerators) {
        os << "\n[numerator]\n" << bp::to_string(b);
    }
    return os.str();
}

std::string nodal_block_text(const NodalDivisor& N) {
    std::ostringstream os;
    os << "[nodal]\n";
    if (up::deg(N.chi) > 0) {
        os << "lambda=" << N.lambda << '\n';
        os << "chi=" << up::to_string(N.chi) << '\n';
        os << "u=" << up::to_string(N.u) << '\n';
        os << "v=" << up::to_string(N.v) << '\n';
        os << "T_E=" << up::to_string(N.tangent_poly) << '\n';
    }
    return os.str();
}

std::string curve_file_text(const Curve& C,
                            const std::vector<std::string>& header_comments) {
    std::ostringstream os;
    for (const auto& h : header_comments) os << "# " << h << '\n';
    os << "[field]\np=" << C.F.p() << "\n\n[curve]\n" << bp::to_string(C.q)
       << '\n' << nodal_block_text(C.nodes);
    return os.str();
}

}  // namespace rr
