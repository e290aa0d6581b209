#include "ainf/report.hpp"

#include <sstream>

namespace ainf {

namespace {

void append_term(std::ostringstream& out, bool first, const Integer& coeff,
                 const std::string& word) {
    const bool negative = coeff.sign() < 0;
    Integer mag = negative ? -coeff : coeff;
    if (first)
        out << (negative ? "-" : "");
    else
        out << (negative ? " - " : " + ");
    if (!(mag == Integer(1))) out << mag.str() << "·";
    out << word;
}

std::string word_text(const TensorWord& w) {
    std::string out;
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (i) out += "⊗";
        out += label(w.factors[i]);
    }
    return out;
}

}  // namespace

std::string to_text(const Tensor& t) {
    if (t.is_zero()) return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [w, k] : t.terms()) {
        append_term(out, first, k, word_text(w));
        first = false;
    }
    return out.str();
}

std::string to_text(const Chain& c) {
    if (c.is_zero()) return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [cell, k] : c.terms()) {
        append_term(out, first, k, label(cell));
        first = false;
    }
    return out.str();
}

std::string to_text(const RelationReport& r) {
    std::ostringstream out;
    out << "relation n=" << r.n
        << (r.view == CoefficientView::mod2 ? " (mod 2)" : "") << ": "
        << (r.holds ? "holds" : "FAILS") << " (lhs_terms=" << r.lhs_terms
        << ", rhs_terms=" << r.rhs_terms << ")";
    if (!r.holds) {
        for (const auto& [cell, defect] : r.defects) {
            Tensor shown = r.view == CoefficientView::mod2 ? defect.reduced_mod2() : defect;
            if (shown.is_zero()) continue;
            out << "\n  defect at " << label(cell) << ": " << to_text(shown);
        }
    }
    return out.str();
}

nlohmann::json terms_json(const Tensor& t) {
    nlohmann::json out = nlohmann::json::array();
    for (const auto& [w, k] : t.terms()) {
        nlohmann::json word = nlohmann::json::array();
        for (const Cell& c : w.factors) word.push_back(label(c));
        auto small = k.as_int64();
        nlohmann::json coeff = small ? nlohmann::json(*small) : nlohmann::json(k.str());
        out.push_back(nlohmann::json{{"coeff", coeff}, {"word", word}});
    }
    return out;
}

nlohmann::json report_json(const RelationReport& r) {
    nlohmann::json out = nlohmann::json::array();
    for (const auto& [cell, defect] : r.defects) {
        Tensor shown = r.view == CoefficientView::mod2 ? defect.reduced_mod2() : defect;
        out.push_back(nlohmann::json{{"cell", label(cell)},
                                     {"relation", r.n},
                                     {"terms", terms_json(shown)},
                                     {"holds", shown.is_zero()}});
    }
    return out;
}

std::string matrix_text(const std::vector<std::vector<int>>& m) {
    std::ostringstream out;
    for (std::size_t i = 0; i < m.size(); ++i) {
        for (std::size_t j = 0; j < m[i].size(); ++j) {
            if (j) out << ' ';
            out << m[i][j];
        }
        out << '\n';
    }
    return out.str();
}

}  // namespace ainf
