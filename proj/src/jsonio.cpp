#include "gtl/jsonio.hpp"

#include <limits>
#include <sstream>
#include <stdexcept>

namespace gtl {

namespace {

Json int_to_json(const Int& c) {
  if (c >= std::numeric_limits<std::int64_t>::min() &&
      c <= std::numeric_limits<std::int64_t>::max())
    return Json(c.convert_to<std::int64_t>());
  return Json(c.str());
}

Int int_from_json(const Json& j) {
  if (j.is_number_integer()) return Int(j.get<std::int64_t>());
  if (j.is_string()) return Int(j.get<std::string>());
  throw std::invalid_argument("coefficient must be an integer or a decimal string");
}

}  // namespace

Json laurent_to_json(const Laurent& p) {
  Json j = Json::object();
  for (const auto& [exp, c] : p.terms()) j[std::to_string(exp)] = int_to_json(c);
  return j;
}

Laurent laurent_from_json(const Json& j) {
  Laurent p;
  if (!j.is_object()) throw std::invalid_argument("polynomial must be an object");
  for (const auto& [key, val] : j.items())
    p += Laurent::term(int_from_json(val), std::stoi(key));
  return p;
}

Json word_to_json(const Word& w) {
  Json j = Json::array();
  for (Gen s : w) j.push_back(s + 1);
  return j;
}

Word word_from_json(const Json& j) {
  if (!j.is_array()) throw std::invalid_argument("word must be an array");
  Word w;
  for (const auto& entry : j) {
    int s = entry.get<int>();
    if (s < 1) throw std::invalid_argument("generator numbers are 1-based");
    w.push_back(s - 1);
  }
  return w;
}

std::string word_text(const Word& w) {
  if (w.empty()) return "e";
  std::ostringstream out;
  for (size_t i = 0; i < w.size(); ++i) {
    if (i) out << '.';
    out << w[i] + 1;
  }
  return out.str();
}

Json polyvec_to_json(const PolyVec& vec) {
  Json coeffs = Json::array();
  for (const auto& [w, p] : vec)
    coeffs.push_back(Json{{"word", word_to_json(w)}, {"poly", laurent_to_json(p)}});
  return Json{{"coeffs", std::move(coeffs)}};
}

PolyVec polyvec_from_json(const Json& j) {
  PolyVec vec;
  for (const auto& entry : j.at("coeffs"))
    vec_add_term(vec, word_from_json(entry.at("word")),
                 laurent_from_json(entry.at("poly")));
  return vec;
}

Json ic_table_to_json(const ICTable& table) {
  Json rows = Json::array();
  for (const auto& [w, row] : table.rows) {
    Json coeffs = Json::array();
    for (const auto& [x, h] : row)
      coeffs.push_back(Json{{"x", word_to_json(x)}, {"h", laurent_to_json(h)}});
    rows.push_back(Json{{"w", word_to_json(w)}, {"coeffs", std::move(coeffs)}});
  }
  return rows;
}

ICTable ic_table_from_json(const Json& j) {
  ICTable table;
  for (const auto& entry : j) {
    PolyVec row;
    for (const auto& coeff : entry.at("coeffs"))
      vec_add_term(row, word_from_json(coeff.at("x")),
                   laurent_from_json(coeff.at("h")));
    table.rows.emplace(word_from_json(entry.at("w")), std::move(row));
  }
  return table;
}

Json kernel_report_to_json(const KernelReport& report) {
  Json witnesses = Json::array();
  for (const Word& w : report.witnesses) witnesses.push_back(word_to_json(w));
  return Json{{"graph", report.graph},
              {"dim_J", report.dim_J},
              {"kl_in_kernel", report.kl_in_kernel},
              {"spanned", report.spanned},
              {"projected_equals_ic", report.projected_equals_ic},
              {"witnesses", std::move(witnesses)}};
}

std::string enumeration_jsonl(const std::vector<std::pair<Word, bool>>& elements) {
  std::ostringstream out;
  for (const auto& [w, in_wc] : elements) {
    Json line{{"word", word_to_json(w)},
              {"length", w.size()},
              {"in_wc", in_wc}};
    out << line.dump() << '\n';
  }
  return out.str();
}

std::string matrix_csv(const std::map<Word, PolyVec, LenLex>& columns) {
  std::ostringstream out;
  out << "w,x,entry\n";
  for (const auto& [w, col] : columns)
    for (const auto& [x, p] : col)
      out << word_text(w) << ',' << word_text(x) << ',' << p.str() << '\n';
  return out.str();
}

std::string ic_table_latex(const ICTable& table) {
  std::ostringstream out;
  out << "\\begin{tabular}{ll}\n$w$ & $c_w$ \\\\\n\\hline\n";
  for (const auto& [w, row] : table.rows) {
    out << '$' << word_text(w) << "$ & $";
    bool first = true;
    for (const auto& [x, h] : row) {
      if (!first) out << " + ";
      first = false;
      out << '(' << h.latex() << ")\\, m'_{" << word_text(x) << '}';
    }
    out << "$ \\\\\n";
  }
  out << "\\end{tabular}\n";
  return out.str();
}

}  // namespace gtl
