#include "tracecode/io.hpp"

#include <istream>
#include <sstream>

namespace tracecode {

namespace {

std::string strip(const std::string& s) {
    size_t b = s.find_first_not_of(" \t\r\n");
    if (b == std::string::npos) return "";
    size_t e = s.find_last_not_of(" \t\r\n");
    return s.substr(b, e - b + 1);
}

int64_t parse_int(const std::string& s) {
    try {
        size_t pos = 0;
        int64_t v = std::stoll(strip(s), &pos);
        if (pos != strip(s).size()) throw ParseError("trailing characters in integer '" + s + "'");
        return v;
    } catch (const ParseError&) {
        throw;
    } catch (const std::exception&) {
        throw ParseError("expected an integer, got '" + s + "'");
    }
}

// Split on a delimiter at bracket depth zero.
std::vector<std::string> split_top_level(const std::string& s, char delim) {
    std::vector<std::string> out;
    std::string cur;
    int depth = 0;
    for (char ch : s) {
        if (ch == '[') ++depth;
        if (ch == ']') --depth;
        if (ch == delim && depth == 0) {
            out.push_back(cur);
            cur.clear();
        } else {
            cur.push_back(ch);
        }
    }
    out.push_back(cur);
    return out;
}

std::vector<int64_t> parse_int_list(const std::string& s) {
    std::vector<int64_t> out;
    for (const auto& tok : split_top_level(s, ',')) out.push_back(parse_int(tok));
    return out;
}

}  // namespace

std::string format_field_spec(const Field& f) { return f.spec_string(); }

FieldPtr parse_field_spec(const std::string& text) {
    auto tokens = split_top_level(strip(text), ',');
    int64_t p = -1;
    int d = -1;
    std::vector<int64_t> modulus;
    bool in_modulus = false;
    for (const auto& raw : tokens) {
        std::string tok = strip(raw);
        if (tok.rfind("p=", 0) == 0) {
            p = parse_int(tok.substr(2));
        } else if (tok.rfind("d=", 0) == 0) {
            d = static_cast<int>(parse_int(tok.substr(2)));
        } else if (tok.rfind("modulus=", 0) == 0) {
            in_modulus = true;
            modulus.push_back(parse_int(tok.substr(8)));
        } else if (in_modulus) {
            modulus.push_back(parse_int(tok));
        } else {
            throw ParseError("unexpected token '" + tok + "' in field spec");
        }
    }
    if (p < 0 || d < 0) throw ParseError("field spec needs p=<int>,d=<int>");
    return modulus.empty() ? Field::make(p, d) : Field::make(p, d, modulus);
}

FieldPtr parse_field_flag(const std::string& text) {
    auto parts = parse_int_list(text);
    if (parts.size() < 2) throw ParseError("--field expects p,d[,c0,...,cd]");
    int64_t p = parts[0];
    int d = static_cast<int>(parts[1]);
    if (parts.size() == 2) return Field::make(p, d);
    std::vector<int64_t> modulus(parts.begin() + 2, parts.end());
    if (modulus.size() != static_cast<size_t>(d) + 1)
        throw ParseError("--field modulus needs exactly d+1 coefficients");
    return Field::make(p, d, modulus);
}

std::string format_element_coeffs(const FieldElement& a) {
    std::ostringstream os;
    os << '[';
    const auto& c = a.coeffs();
    for (size_t i = 0; i < c.size(); ++i) {
        if (i) os << ',';
        os << c[i];
    }
    os << ']';
    return os.str();
}

std::string format_element(const FieldElement& a) {
    if (!a.field()->dlog_available()) return format_element_coeffs(a);
    if (a.is_zero()) return "0";
    uint64_t k = a.field()->dlog(a);
    if (k == 0) return "1";
    if (k == 1) return "g";
    return "g^" + std::to_string(k);
}

FieldElement parse_element(const std::string& token, const FieldPtr& f) {
    std::string tok = strip(token);
    if (tok.empty()) throw ParseError("empty element token");
    if (tok.front() == '[') {
        if (tok.back() != ']') throw ParseError("unterminated '[' in element '" + tok + "'");
        std::vector<int64_t> coeffs = parse_int_list(tok.substr(1, tok.size() - 2));
        if (coeffs.size() > static_cast<size_t>(f->degree()))
            throw ParseError("too many coefficients in element '" + tok + "'");
        return f->element(std::move(coeffs));
    }
    if (tok.front() == 'g') {
        if (tok == "g") return f->generator();
        if (tok.rfind("g^", 0) == 0) return f->generator().pow(parse_int(tok.substr(2)));
        throw ParseError("bad power notation '" + tok + "'");
    }
    int64_t v = parse_int(tok);
    if (v < 0 || static_cast<uint64_t>(v) >= f->order())
        throw ParseError("element index " + tok + " out of range for this field");
    return f->from_index(static_cast<uint64_t>(v));
}

namespace {

// Digits for prime fields, bracketed coefficient form otherwise.
std::string format_ground_entry(const FieldElement& a) {
    if (a.field()->degree() == 1) return std::to_string(a.coeffs()[0]);
    return format_element_coeffs(a);
}

}  // namespace

std::string format_poly(const Poly& p) {
    if (p.is_zero()) return "0";
    std::ostringstream os;
    for (int i = 0; i <= p.degree(); ++i) {
        if (i) os << ',';
        os << format_ground_entry(p.coeff(i));
    }
    return os.str();
}

Poly parse_poly(const std::string& text, const FieldPtr& f) {
    std::vector<FieldElement> coeffs;
    for (const auto& tok : split_top_level(strip(text), ','))
        coeffs.push_back(parse_element(tok, f));
    return Poly(f, std::move(coeffs));
}

std::string format_basis(const FieldBasis& b) {
    std::ostringstream os;
    for (size_t i = 0; i < b.size(); ++i) {
        if (i) os << ", ";
        os << format_element(b.elements()[i]);
    }
    return os.str();
}

FieldBasis parse_basis(const std::string& text, const FieldPtr& big, const FieldPtr& ground) {
    std::vector<FieldElement> elems;
    for (const auto& tok : split_top_level(strip(text), ','))
        elems.push_back(parse_element(tok, big));
    return FieldBasis(big, ground, std::move(elems));
}

std::string format_matrix(const Matrix& m) {
    std::ostringstream os;
    for (size_t r = 0; r < m.rows(); ++r) {
        for (size_t c = 0; c < m.cols(); ++c) {
            if (c) os << ' ';
            os << format_ground_entry(m.at(r, c));
        }
        os << '\n';
    }
    return os.str();
}

Matrix parse_matrix(std::istream& in, const FieldPtr& f) {
    std::vector<std::vector<FieldElement>> rows;
    std::string line;
    size_t cols = 0;
    while (std::getline(in, line)) {
        std::string t = strip(line);
        if (t.empty() || t.front() == '#') continue;
        std::vector<FieldElement> row;
        std::istringstream ls(t);
        std::string tok;
        while (ls >> tok) row.push_back(parse_element(tok, f));
        if (rows.empty())
            cols = row.size();
        else if (row.size() != cols)
            throw ParseError("matrix rows have inconsistent lengths");
        rows.push_back(std::move(row));
    }
    if (rows.empty() || cols == 0) throw ParseError("matrix input is empty");
    return Matrix::from_rows(f, rows, cols);
}

std::string format_defining_set(const DefiningSet& d) {
    std::ostringstream os;
    os << format_field_spec(*d.big) << '\n';
    FieldPtr default_ground = Field::make(d.big->characteristic(), 1);
    if (!d.ground->same_spec(*default_ground))
        os << "ground=" << format_field_spec(*d.ground) << '\n';
    for (size_t i = 0; i < d.elements.size(); ++i) {
        if (i) os << ", ";
        os << format_element(d.elements[i]);
    }
    os << '\n';
    return os.str();
}

DefiningSet parse_defining_set(std::istream& in) {
    std::string line;
    FieldPtr big;
    FieldPtr ground;
    std::vector<std::string> element_lines;
    while (std::getline(in, line)) {
        std::string t = strip(line);
        if (t.empty() || t.front() == '#') continue;
        if (!big) {
            big = parse_field_spec(t);
        } else if (t.rfind("ground=", 0) == 0) {
            if (!element_lines.empty()) throw ParseError("ground= must precede the elements");
            ground = parse_field_spec(t.substr(7));
        } else {
            element_lines.push_back(t);
        }
    }
    if (!big) throw ParseError("defining-set input is missing the field spec line");
    if (!ground) ground = Field::make(big->characteristic(), 1);
    std::string joined;
    for (size_t i = 0; i < element_lines.size(); ++i) {
        if (i) joined += ',';
        joined += element_lines[i];
    }
    return parse_defining_set_elements(joined, big, ground);
}

DefiningSet parse_defining_set_elements(const std::string& text, const FieldPtr& big,
                                        const FieldPtr& ground) {
    std::string t = strip(text);
    if (t.empty()) throw ParseError("defining set needs at least one element");
    std::vector<FieldElement> elems;
    for (const auto& tok : split_top_level(t, ',')) elems.push_back(parse_element(tok, big));
    return DefiningSet(big, ground, std::move(elems));
}

std::string format_weight_enumerator(const WeightDistribution& w) {
    std::ostringstream os;
    os << w.counts[0];
    for (size_t i = 1; i < w.counts.size(); ++i) {
        if (w.counts[i] == 0) continue;
        os << " + ";
        if (w.counts[i] != 1) os << w.counts[i];
        os << 'z';
        if (i != 1) os << '^' << i;
    }
    return os.str();
}

std::string format_code_params(const LinearCode& c) {
    std::ostringstream os;
    os << '[' << c.length() << ',' << c.dimension();
    if (c.dimension() > 0) {
        try {
            os << ',' << min_distance(c);
        } catch (const TooLargeError&) {
            // parameters without the distance when enumeration is infeasible
        }
    }
    os << ']';
    return os.str();
}

}  // namespace tracecode
