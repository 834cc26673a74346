// config.cpp — INI-style configuration parsing with line/field diagnostics.

#include "hj/config.hpp"

#include <cctype>
#include <cstdlib>
#include <map>
#include <sstream>
#include <vector>

namespace hj {

namespace {

struct key_entry {
    std::string value;
    int line;
};

using section_map = std::map<std::string, std::map<std::string, key_entry>>;

[[noreturn]] void parse_fail(int line, const std::string& what) {
    fail(status::invalid_argument, strfmt("config line %d: %s", line, what.c_str()));
}

std::string trim(const std::string& s) {
    std::size_t a = s.find_first_not_of(" \t\r\n");
    if (a == std::string::npos) return "";
    std::size_t b = s.find_last_not_of(" \t\r\n");
    return s.substr(a, b - a + 1);
}

// Tokenize the raw text into sections of key -> (value text, line number).
section_map read_sections(const std::string& text) {
    section_map out;
    std::istringstream is(text);
    std::string line;
    std::string section;
    int lineno = 0;
    while (std::getline(is, line)) {
        ++lineno;
        std::string s = trim(line);
        if (s.empty() || s[0] == '#' || s[0] == ';') continue;
        if (s.front() == '[') {
            if (s.back() != ']') parse_fail(lineno, "unterminated section header");
            section = trim(s.substr(1, s.size() - 2));
            if (section.empty()) parse_fail(lineno, "empty section name");
            out[section];  // create even if empty
            continue;
        }
        std::size_t eq = s.find('=');
        if (eq == std::string::npos)
            parse_fail(lineno, "expected 'key = value'");
        std::string key = trim(s.substr(0, eq));
        std::string val = trim(s.substr(eq + 1));
        if (key.empty()) parse_fail(lineno, "empty key");
        if (section.empty())
            parse_fail(lineno, strfmt("key '%s' outside any section", key.c_str()));
        if (out[section].count(key))
            parse_fail(lineno, strfmt("duplicate key '%s' in [%s]", key.c_str(),
                                      section.c_str()));
        out[section][key] = {val, lineno};
    }
    return out;
}

double to_double(const key_entry& e, const std::string& key) {
    const char* s = e.value.c_str();
    char* end = nullptr;
    double x = std::strtod(s, &end);
    if (end == s || trim(end)[0] != '\0' || !std::isfinite(x))
        parse_fail(e.line, strfmt("key '%s': expected a number, got '%s'",
                                  key.c_str(), e.value.c_str()));
    return x;
}

int to_int(const key_entry& e, const std::string& key) {
    double x = to_double(e, key);
    int n = static_cast<int>(x);
    if (static_cast<double>(n) != x)
        parse_fail(e.line, strfmt("key '%s': expected an integer", key.c_str()));
    return n;
}

bool to_bool(const key_entry& e, const std::string& key) {
    std::string v = e.value;
    for (char& c : v) c = static_cast<char>(std::tolower(c));
    if (v == "true" || v == "yes" || v == "1") return true;
    if (v == "false" || v == "no" || v == "0") return false;
    parse_fail(e.line, strfmt("key '%s': expected a boolean", key.c_str()));
}

// Parse "[a, b, c]" or "[[..],[..]]" style bracketed arrays into flat tokens
// with nesting tracked by the caller via parse_number_list/parse_triples.
std::vector<double> parse_number_list(const key_entry& e, const std::string& key) {
    const std::string& v = e.value;
    if (v.empty() || v.front() != '[' || v.back() != ']')
        parse_fail(e.line, strfmt("key '%s': expected a [..] list", key.c_str()));
    std::vector<double> out;
    std::string body = v.substr(1, v.size() - 2);
    std::istringstream is(body);
    std::string tok;
    while (std::getline(is, tok, ',')) {
        tok = trim(tok);
        if (tok.empty()) continue;
        const char* s = tok.c_str();
        char* end = nullptr;
        double x = std::strtod(s, &end);
        if (end == s || trim(end)[0] != '\0')
            parse_fail(e.line, strfmt("key '%s': bad list entry '%s'", key.c_str(),
                                      tok.c_str()));
        out.push_back(x);
    }
    return out;
}

// Parse "[[n, a, b], [n, a, b], ...]"
std::vector<harmonic> parse_triples(const key_entry& e, const std::string& key) {
    const std::string& v = e.value;
    if (v.empty() || v.front() != '[' || v.back() != ']')
        parse_fail(e.line, strfmt("key '%s': expected a [[n,a,b],...] list", key.c_str()));
    std::vector<harmonic> out;
    std::string body = v.substr(1, v.size() - 2);
    std::size_t pos = 0;
    while (true) {
        std::size_t lb = body.find('[', pos);
        if (lb == std::string::npos) break;
        std::size_t rb = body.find(']', lb);
        if (rb == std::string::npos)
            parse_fail(e.line, strfmt("key '%s': unterminated inner list", key.c_str()));
        std::istringstream is(body.substr(lb + 1, rb - lb - 1));
        std::vector<double> nums;
        std::string tok;
        while (std::getline(is, tok, ',')) {
            tok = trim(tok);
            if (tok.empty()) continue;
            const char* s = tok.c_str();
            char* end = nullptr;
            double x = std::strtod(s, &end);
            if (end == s || trim(end)[0] != '\0')
                parse_fail(e.line, strfmt("key '%s': bad entry '%s'", key.c_str(),
                                          tok.c_str()));
            nums.push_back(x);
        }
        if (nums.size() != 3)
            parse_fail(e.line,
                       strfmt("key '%s': each coefficient needs [n, a, b]", key.c_str()));
        harmonic h;
        h.n = static_cast<int>(nums[0]);
        if (static_cast<double>(h.n) != nums[0])
            parse_fail(e.line, strfmt("key '%s': harmonic index must be integral",
                                      key.c_str()));
        h.a = nums[1];
        h.b = nums[2];
        out.push_back(h);
        pos = rb + 1;
    }
    return out;
}

potential parse_potential_section(const std::map<std::string, key_entry>& sec,
                                  const std::string& name) {
    auto need = [&](const char* key) -> const key_entry& {
        auto it = sec.find(key);
        if (it == sec.end())
            fail(status::invalid_argument,
                 strfmt("config section [%s]: missing key '%s'", name.c_str(), key));
        return it->second;
    };
    auto known = [&](std::initializer_list<const char*> keys) {
        for (const auto& kv : sec) {
            bool ok = false;
            for (const char* k : keys)
                if (kv.first == k) ok = true;
            if (!ok)
                parse_fail(kv.second.line,
                           strfmt("section [%s]: unknown key '%s'", name.c_str(),
                                  kv.first.c_str()));
        }
    };

    const key_entry& kind_e = need("kind");
    double period = sec.count("period") ? to_double(sec.at("period"), "period") : 1.0;
    std::optional<bool> hint;
    if (sec.count("even")) hint = to_bool(sec.at("even"), "even");

    potential p = potential::make_constant(0.0);  // replaced below
    const std::string kind = kind_e.value;
    if (kind == "constant") {
        known({"kind", "period", "value", "even"});
        p = potential::make_constant(to_double(need("value"), "value"), period);
    } else if (kind == "piecewise") {
        known({"kind", "period", "breakpoints", "values", "even"});
        p = potential::make_piecewise(parse_number_list(need("breakpoints"), "breakpoints"),
                                      parse_number_list(need("values"), "values"), period);
    } else if (kind == "fourier") {
        known({"kind", "period", "mean", "coefficients", "even"});
        double mean = sec.count("mean") ? to_double(sec.at("mean"), "mean") : 0.0;
        p = potential::make_fourier(mean, parse_triples(need("coefficients"), "coefficients"),
                                    period);
    } else if (kind == "samples") {
        known({"kind", "period", "samples", "even"});
        p = potential::make_samples(parse_number_list(need("samples"), "samples"), period);
    } else {
        parse_fail(kind_e.line, strfmt("unknown potential kind '%s'", kind.c_str()));
    }
    p.even_hint = hint;
    return p;
}

}  // namespace

potential parse_potential_text(const std::string& body) {
    section_map m = read_sections("[potential]\n" + body);
    return parse_potential_section(m.at("potential"), "potential");
}

run_config parse_config(const std::string& text) {
    section_map m = read_sections(text);
    run_config cfg;
    for (const auto& [name, sec] : m) {
        if (name == "potential" || name == "potential.right") {
            if (cfg.right)
                fail(status::invalid_argument,
                     "config: both [potential] and [potential.right] given");
            cfg.right = parse_potential_section(sec, name);
        } else if (name == "potential.left") {
            cfg.left = parse_potential_section(sec, name);
        } else if (name == "run") {
            for (const auto& [key, e] : sec) {
                if (key == "mode") {
                    if (e.value != "junction" && e.value != "dislocation" &&
                        e.value != "half-solid")
                        parse_fail(e.line, strfmt("unknown mode '%s'", e.value.c_str()));
                    cfg.mode = e.value;
                } else if (key == "nmax") {
                    cfg.n_max = to_int(e, key);
                    if (cfg.n_max < 0) parse_fail(e.line, "nmax must be >= 0");
                } else if (key == "lambda_max") {
                    cfg.lambda_max = to_double(e, key);
                } else if (key == "t") {
                    cfg.t = to_double(e, key);
                } else if (key == "tsteps") {
                    cfg.t_steps = to_int(e, key);
                    if (cfg.t_steps < 2) parse_fail(e.line, "tsteps must be >= 2");
                } else if (key == "trange") {
                    std::vector<double> r = parse_number_list(e, key);
                    if (r.size() != 2 || !(r[0] < r[1]))
                        parse_fail(e.line, "trange must be [lo, hi] with lo < hi");
                    cfg.t_range_lo = r[0];
                    cfg.t_range_hi = r[1];
                } else if (key == "s") {
                    cfg.s = to_double(e, key);
                } else if (key == "tol") {
                    cfg.tol = to_double(e, key);
                    if (!(cfg.tol > 0)) parse_fail(e.line, "tol must be positive");
                } else if (key == "format") {
                    if (e.value != "csv" && e.value != "json")
                        parse_fail(e.line, "format must be csv or json");
                    cfg.format = e.value;
                } else if (key == "output") {
                    cfg.output = e.value;
                } else {
                    parse_fail(e.line, strfmt("section [run]: unknown key '%s'",
                                              key.c_str()));
                }
            }
        } else {
            fail(status::invalid_argument,
                 strfmt("config: unknown section [%s]", name.c_str()));
        }
    }
    return cfg;
}

const potential& run_config::primary() const {
    if (right) return *right;
    if (left) return *left;
    fail(status::invalid_argument, "config: no potential section given");
}

const potential& run_config::left_side() const {
    if (left) return *left;
    fail(status::invalid_argument, "config: missing [potential.left]");
}

const potential& run_config::right_side() const {
    if (right) return *right;
    fail(status::invalid_argument, "config: missing [potential.right] (or [potential])");
}

}  // namespace hj
