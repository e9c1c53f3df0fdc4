#include "plab/structure_io.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

#include "plab/expr.hpp"

namespace plab {

namespace {

std::string trimmed(std::string s) {
    std::size_t b = 0, e = s.size();
    while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
    while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
    return s.substr(b, e - b);
}

bool valid_name(const std::string& s) {
    if (s.empty()) return false;
    if (!std::isalpha(static_cast<unsigned char>(s[0])) && s[0] != '_') return false;
    for (char c : s)
        if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_') return false;
    return true;
}

std::vector<std::string> split_names(const std::string& s) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : s) {
        if (c == ',' || std::isspace(static_cast<unsigned char>(c))) {
            if (!cur.empty()) out.push_back(std::move(cur));
            cur.clear();
        } else {
            cur += c;
        }
    }
    if (!cur.empty()) out.push_back(std::move(cur));
    return out;
}

std::vector<std::string> meaningful_lines(std::string_view text) {
    std::vector<std::string> lines;
    std::istringstream in{std::string(text)};
    std::string line;
    while (std::getline(in, line)) {
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        line = trimmed(line);
        if (!line.empty()) lines.push_back(line);
    }
    return lines;
}

} // namespace

PoissonStructure parse_structure(std::string_view text, bool validate_jacobi) {
    std::vector<std::string> lines = meaningful_lines(text);
    std::size_t at = 0;
    auto starts_with = [&](const char* key) {
        return at < lines.size() && lines[at].rfind(key, 0) == 0;
    };
    auto rest_of = [&](const char* key) {
        return trimmed(lines[at].substr(std::string(key).size()));
    };

    if (!starts_with("variables:")) throw StructureError("expected a 'variables:' line");
    std::vector<std::string> vars = split_names(rest_of("variables:"));
    ++at;
    if (vars.empty()) throw StructureError("no variables declared");

    std::vector<std::string> central;
    if (starts_with("central:")) {
        central = split_names(rest_of("central:"));
        ++at;
    }

    std::vector<std::string> names = vars;
    names.insert(names.end(), central.begin(), central.end());
    for (const auto& n : names)
        if (!valid_name(n)) throw StructureError("invalid variable name '" + n + "'");
    for (std::size_t i = 0; i < names.size(); ++i)
        for (std::size_t j = i + 1; j < names.size(); ++j)
            if (names[i] == names[j]) throw StructureError("duplicate name '" + names[i] + "'");

    const std::size_t n_total = names.size();
    std::vector<bool> central_mask(n_total, false);
    for (std::size_t k = vars.size(); k < n_total; ++k) central_mask[k] = true;

    PoissonStructure s = PoissonStructure::log_canonical(names, SkewMatrix(n_total), central_mask);
    if (starts_with("omega:")) {
        ++at;
        const std::size_t n = vars.size();
        std::vector<std::vector<Rational>> rows;
        for (std::size_t r = 0; r < n; ++r, ++at) {
            if (at >= lines.size()) throw StructureError("omega: expected " + std::to_string(n) + " rows");
            std::istringstream rowin(lines[at]);
            std::vector<Rational> row;
            std::string cell;
            while (rowin >> cell) row.push_back(Rational::from_string(cell));
            if (row.size() != n)
                throw StructureError("omega: row " + std::to_string(r + 1) + " has " +
                                     std::to_string(row.size()) + " entries, expected " +
                                     std::to_string(n));
            rows.push_back(std::move(row));
        }
        SkewMatrix omega_vars = SkewMatrix::from_rows(rows); // validates skew-symmetry
        SkewMatrix omega(n_total);                           // central rows stay zero
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i + 1; j < n; ++j) omega.set(i, j, omega_vars.at(i, j));
        s = PoissonStructure::log_canonical(names, std::move(omega), central_mask);
    } else if (starts_with("brackets:")) {
        ++at;
        std::map<std::pair<std::size_t, std::size_t>, RationalFunction> upper;
        std::map<std::pair<std::size_t, std::size_t>, RationalFunction> oriented;
        for (; at < lines.size(); ++at) {
            const std::string& line = lines[at];
            auto colon = line.find(':');
            if (colon == std::string::npos)
                throw StructureError("brackets: expected 'x,y: expression' but got '" + line + "'");
            std::vector<std::string> pair = split_names(line.substr(0, colon));
            if (pair.size() != 2)
                throw StructureError("brackets: expected exactly two names before ':' in '" + line + "'");
            std::size_t i, j;
            try {
                i = s.index_of(pair[0]);
                j = s.index_of(pair[1]);
            } catch (const StructureError& e) {
                throw StructureError(std::string(e.what()) + " in '" + line + "'");
            }
            if (i == j) throw StructureError("brackets: {x,x} entries are not allowed");
            RationalFunction value = parse_expr(line.substr(colon + 1), names);
            if (!oriented.emplace(std::make_pair(i, j), value).second)
                throw StructureError("duplicate bracket pair '" + pair[0] + "," + pair[1] + "'");
            if (central_mask[i] || central_mask[j]) {
                if (!value.is_zero())
                    throw StructureError("bracket involving central symbol '" + pair[0] + "," +
                                         pair[1] + "' must be zero");
                continue;
            }
            auto key = i < j ? std::make_pair(i, j) : std::make_pair(j, i);
            RationalFunction upper_value = i < j ? value : -value;
            auto it = upper.find(key);
            if (it == upper.end()) {
                upper.emplace(key, std::move(upper_value));
            } else if (it->second != upper_value) {
                throw StructureError("brackets for '" + names[key.first] + "," + names[key.second] +
                                     "' given in both orientations are inconsistent");
            }
        }
        s = PoissonStructure::general(names, central_mask, std::move(upper));
    } else {
        throw StructureError("expected an 'omega:' or 'brackets:' section");
    }

    if (at < lines.size())
        throw StructureError("unexpected trailing line '" + lines[at] + "'");

    if (validate_jacobi) {
        ValidationReport report = structure_validate(s);
        if (!report.valid()) {
            const auto& f = report.failures.front();
            throw StructureError("structure violates the Jacobi identity on (" + names[f.i] + "," +
                                 names[f.j] + "," + names[f.k] + ")");
        }
    }
    return s;
}

PoissonStructure load_structure(const std::filesystem::path& path, bool validate_jacobi) {
    std::ifstream in(path);
    if (!in) throw StructureError("cannot open structure file '" + path.string() + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_structure(buf.str(), validate_jacobi);
}

} // namespace plab
