#include "advshare/codefile.hpp"

#include <fstream>
#include <sstream>

#include "advshare/error.hpp"

namespace advshare {

namespace {

int parse_number(const std::string& token, std::size_t line) {
    std::size_t used = 0;
    long long v = 0;
    try {
        v = std::stoll(token, &used);
    } catch (const std::exception&) {
        used = 0;
    }
    if (used == 0 || used != token.size()) throw ParseError(line, "expected an integer, got '" + token + "'");
    if (v < 0 || v > 1'000'000) throw ParseError(line, "value " + token + " out of range");
    return static_cast<int>(v);
}

}  // namespace

CodeFile parse_code_file(std::string_view text) {
    std::istringstream in{std::string(text)};
    std::string raw;
    std::size_t line = 0;
    bool have_header = false;
    CodeFile out;
    while (std::getline(in, raw)) {
        ++line;
        if (auto pos = raw.find('#'); pos != std::string::npos) raw.erase(pos);
        // '|' may touch its neighbours.
        std::string spaced;
        for (char ch : raw) {
            if (ch == '|') {
                spaced += " | ";
            } else {
                spaced += ch;
            }
        }
        std::istringstream fields(spaced);
        std::vector<std::string> tok;
        for (std::string t; fields >> t;) tok.push_back(t);
        if (tok.empty()) continue;

        if (!have_header) {
            if (tok.size() != 2 || tok[0].rfind("p=", 0) != 0 || tok[1].rfind("n=", 0) != 0) {
                throw ParseError(line, "expected header 'p=<prime> n=<count>'");
            }
            out.p = parse_number(tok[0].substr(2), line);
            if (!is_supported_prime(out.p)) {
                throw ParseError(line, "unsupported prime p=" + std::to_string(out.p) + " (expected 2, 3, 5 or 7)");
            }
            out.n = static_cast<std::size_t>(parse_number(tok[1].substr(2), line));
            if (out.n == 0) throw ParseError(line, "n must be positive");
            out.check = FpMatrix(out.p, 0, 2 * out.n);
            have_header = true;
            continue;
        }

        const std::size_t n = out.n;
        if (tok.size() != 2 * n + 1 || tok[n] != "|") {
            throw ParseError(line, "expected " + std::to_string(n) + " x-exponents, '|', then " + std::to_string(n) +
                                       " z-exponents");
        }
        FpVector row(out.p, 2 * n);
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t half = 0; half < 2; ++half) {
                const std::string& t = tok[half == 0 ? i : n + 1 + i];
                const int v = parse_number(t, line);
                if (v >= out.p) throw ParseError(line, "exponent " + t + " not in [0, p)");
                row.set(half * n + i, v);
            }
        }
        out.check.append_row(row);
    }
    if (!have_header) throw ParseError(line == 0 ? 1 : line, "missing header 'p=<prime> n=<count>'");
    return out;
}

CodeFile read_code_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw InvalidArgument("cannot read " + path.string());
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_code_file(buf.str());
}

StabilizerCode load_stabilizer(std::string_view text) {
    const CodeFile f = parse_code_file(text);
    return validate_stabilizer(f.check, f.p, f.n);
}

std::string print_code_file(int p, std::size_t n, const FpMatrix& check) {
    std::ostringstream out;
    out << "p=" << p << " n=" << n << '\n';
    for (std::size_t r = 0; r < check.rows(); ++r) {
        for (std::size_t i = 0; i < 2 * n; ++i) {
            if (i == n) out << " |";
            out << (i == 0 ? "" : " ") << check.at(r, i);
        }
        out << '\n';
    }
    return out.str();
}

std::string print_code_file(const StabilizerCode& code) {
    return print_code_file(code.modulus(), code.n(), code.check_matrix());
}

}  // namespace advshare
