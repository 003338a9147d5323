#include <algorithm>
#include <cmath>

#include "qortho/verify.hpp"

// The fixed, versioned parameter manifest. Grids are chosen inside each
// check's validity domain; q-dependent entries are scaled per q so every grid
// point stays admissible for all three default bases.

namespace qortho::verify {

const char* kGridVersion = "grids-v1";

namespace {

const std::vector<double> kDefaultQ{0.3, 0.5, 0.8};

using Row = std::vector<std::pair<const char*, double>>;

void push(std::vector<ParamList>& out, double q, const Row& row) {
  ParamList p{{"q", q}};
  for (const auto& [k, v] : row) p.emplace_back(k, v);
  out.push_back(std::move(p));
}

}  // namespace

const std::vector<CheckInfo>& catalog() {
  static const std::vector<CheckInfo> cat{
      {"POCH_2_12", 2, "(2.12)", "poch"},
      {"INT_2_2", 2, "(2.2)", "integral"},
      {"INT_2_16", 2, "(2.16)", "integral"},
      {"INT_2_22", 2, "(2.22)", "integral"},
      {"INT_3_6", 3, "(3.6)", "integral"},
      {"INT_3_21", 3, "(3.21)", "integral"},
      {"INT_4_2", 4, "(4.2)", "integral"},
      {"INT_5_5", 5, "(5.5)", "integral"},
      {"INT_5_10", 5, "Prop 5.1 (5.10)", "integral"},
      {"INT_5_24", 5, "(5.24)", "integral"},
      {"SUM_3_7", 3, "(3.7)/(3.6)", "integral"},
      {"ID_2_3", 2, "(2.3)", "identity"},
      {"ID_2_7", 2, "(2.7)", "identity"},
      {"ID_2_11", 2, "(2.11)", "identity"},
      {"ID_2_14", 2, "(2.14)", "identity"},
      {"ID_2_20", 2, "(2.20)", "identity"},
      {"ID_3_5", 3, "(3.5)", "identity"},
      {"ID_3_7", 3, "(3.7)", "identity"},
      {"ID_3_14", 3, "(3.14)", "identity"},
      {"ID_3_20", 3, "(3.20)", "identity"},
      {"ID_5_9", 5, "(5.9)", "identity"},
      {"GRAM_2_1", 2, "(2.1)", "gram"},
      {"GRAM_2_9", 2, "(2.9)", "gram"},
      {"GRAM_2_18", 2, "(2.18)", "gram"},
      {"GRAM_3_2", 3, "(3.2)", "gram"},
      {"GRAM_3_11", 3, "(3.11)", "gram"},
      {"GRAM_3_18_M", 3, "(3.18)/(3.15)", "gram"},
      {"GRAM_3_18_S", 3, "(3.18)/(3.16)", "gram"},
      {"GRAM_1_17", 1, "(1.17)", "gram"},
      {"GRAM_5_3", 5, "(5.3)", "gram"},
      {"GRAM_5_14", 5, "(5.14)", "gram"},
      {"BIGRAM_3_24", 3, "(3.24)", "bigram"},
      {"BIGRAM_4_8", 4, "(4.8)", "bigram"},
      {"BIGRAM_5_22", 5, "(5.22)", "bigram"},
      {"BIGRAM_5_25", 5, "(5.25)", "bigram"},
      {"GF_1_8", 1, "(1.8)", "genfun"},
      {"GF_1_9", 1, "(1.9)", "genfun"},
      {"GF_2_15", 2, "(2.15)", "genfun"},
      {"GF_2_21", 2, "(2.21)", "genfun"},
      {"GF_3_1", 3, "(3.1)", "genfun"},
      {"GF_3_19", 3, "(3.19)", "genfun"},
      {"GF_4_1", 4, "(4.1)", "genfun"},
      {"GF_4_9", 4, "(4.9)", "genfun"},
      {"GF_5_4", 5, "(5.4)", "genfun"},
      {"GF_5_15", 5, "(5.15)", "genfun"},
      {"REP_CQH", 2, "(1.5)/(1.9)", "rep"},
      {"REP_DQH", 1, "(1.6)/(1.8)", "rep"},
      {"REP_QINVH", 5, "(5.1)/(5.4)", "rep"},
      {"REP_ASCU", 3, "(1.13)/(3.1)", "rep"},
      {"REP_ASCV", 3, "(1.14)/(3.19)", "rep"},
      {"REP_ASC", 2, "(2.10)/(2.15)", "rep"},
      {"REP_AW", 2, "(2.17)/(2.21)", "rep"},
      {"REP_BIGQJ", 3, "(3.10)", "rep"},
      {"REP_SZEGO", 1, "(1.16)", "rep"},
      {"REP_PASTRO", 4, "(4.7)", "rep"},
      {"REP_UQINV", 5, "(5.11)/(5.16)", "rep"},
      {"RAD_SZEGO", 4, "(1.4) at (1.17)", "radius"},
      {"RAD_V", 3, "(1.4) at (3.19)", "radius"},
      {"RAD_U", 3, "(1.4) at (3.1)", "radius"},
      {"RAD_QINVH", 5, "(1.4) at (5.4)", "radius"},
      {"MASS_3_3", 3, "(3.3)", "mass"},
      {"MASS_3_15", 3, "(3.15)", "mass"},
      {"MASS_3_16", 3, "(3.16)", "mass"},
      {"MASS_5_NEXT", 5, "N-extremal measure", "mass"},
      {"MASS_5_7", 5, "(5.7)", "mass"},
      {"NONNEG_2_1", 2, "(2.1)", "nonneg"},
      {"NONNEG_2_4", 2, "(2.4)", "nonneg"},
      {"NONNEG_2_19", 2, "(2.19)", "nonneg"},
      {"NONNEG_3_3", 3, "(3.3)", "nonneg"},
      {"NONNEG_3_17", 3, "(3.17)", "nonneg"},
      {"NONNEG_1_17", 1, "(1.17)", "nonneg"},
      {"NONNEG_5_NEXT", 5, "N-extremal measure", "nonneg"},
      {"NONNEG_5_7", 5, "(5.7)", "nonneg"},
      {"THM_5_2", 5, "Thm 5.2 (5.20)", "theorem"},
  };
  return cat;
}

const CheckInfo& info(const std::string& id) {
  for (const CheckInfo& ci : catalog())
    if (ci.id == id) return ci;
  throw UnknownCheckId("unknown check id: " + id);
}

std::vector<ParamList> default_grid(const std::string& id, const std::vector<double>& qs_in) {
  const std::vector<double>& qs = qs_in.empty() ? kDefaultQ : qs_in;
  std::vector<ParamList> out;

  for (double q : qs) {
    const double rq = std::sqrt(q);
    const double q34 = std::pow(q, 0.75);
    const double mt = 0.5 * (1.0 + q);  // N-extremal measure parameter

    if (id == "POCH_2_12") {
      for (const Row& r : {Row{{"a_re", 0.4}, {"n", 3}, {"k", 0}},
                           Row{{"a_re", 0.4}, {"n", 3}, {"k", 3}},
                           Row{{"a_re", 0.4}, {"n", 5}, {"k", 2}},
                           Row{{"a_re", -0.7}, {"a_im", 0.3}, {"n", 8}, {"k", 5}},
                           Row{{"a_re", 1.6}, {"n", 6}, {"k", 6}},
                           Row{{"a_re", -1.2}, {"n", 9}, {"k", 4}}})
        push(out, q, r);
    } else if (id == "INT_2_2") {
      for (const Row& r : {Row{{"t1", 0.0}, {"t2", 0.0}}, Row{{"t1", 0.5}, {"t2", 0.3}},
                           Row{{"t1", -0.6}, {"t2", 0.4}}, Row{{"t1", 0.7}, {"t2", -0.7}},
                           Row{{"t1", 0.9}, {"t2", 0.2}}})
        push(out, q, r);
    } else if (id == "INT_2_16") {
      for (const Row& r :
           {Row{{"t1", 0.3}, {"t2", -0.2}, {"t3", 0.25}, {"t4", 0.1}},
            Row{{"t1", 0.5}, {"t2", 0.4}, {"t3", -0.3}, {"t4", 0.2}},
            Row{{"t1", 0.6}, {"t2", -0.5}, {"t3", 0.4}, {"t4", -0.3}},
            Row{{"t1", 0.2}, {"t2", 0.2}, {"t3", 0.2}, {"t4", 0.2}}})
        push(out, q, r);
    } else if (id == "INT_2_22") {
      for (const Row& r :
           {Row{{"t1", 0.3}, {"t2", 0.2}, {"t3", 0.25}, {"t4", 0.1}, {"t5", 0.4}, {"t6", -0.3}},
            Row{{"t1", 0.4}, {"t2", -0.2}, {"t3", -0.3}, {"t4", 0.2}, {"t5", 0.3}, {"t6", 0.2}},
            Row{{"t1", 0.5}, {"t2", 0.2}, {"t3", 0.3}, {"t4", 0.1}, {"t5", -0.4}, {"t6", 0.2}},
            Row{{"t1", 0.3}, {"t2", 0.3}, {"t3", 0.2}, {"t4", 0.2}, {"t5", 0.5}, {"t6", 0.5}}})
        push(out, q, r);
    } else if (id == "INT_3_6") {
      for (const Row& r : {Row{{"a", -1.0}, {"t1", 0.3}, {"t2", 0.2}},
                           Row{{"a", -0.8}, {"t1", 0.5}, {"t2", -0.4}},
                           Row{{"a", -1.5}, {"t1", 0.25}, {"t2", 0.6}},
                           Row{{"a", -0.5}, {"t1", -0.3}, {"t2", 0.7}}})
        push(out, q, r);
    } else if (id == "INT_3_21") {
      // q < a < 1/q in every case; |t_i| < sqrt(q/a).
      for (const Row& r : {Row{{"a", 1.15}, {"gamma", 0.7}, {"t1", 0.15}, {"t2", -0.1}},
                           Row{{"a", 1.15}, {"gamma", 1.3}, {"t1", 0.2}, {"t2", 0.1}},
                           Row{{"a", 0.87}, {"gamma", 0.7}, {"t1", 0.15}, {"t2", -0.1}},
                           Row{{"a", 0.87}, {"gamma", 1.3}, {"t1", 0.2}, {"t2", 0.1}}})
        push(out, q, r);
    } else if (id == "INT_4_2") {
      for (const Row& r :
           {Row{{"t1", 0.5 * rq}, {"t2", 0.3 * rq}}, Row{{"t1", -0.7 * rq}, {"t2", 0.5 * rq}},
            Row{{"t1", 0.8 * rq}, {"t2", -0.6 * rq}}, Row{{"t1", 0.2 * rq}, {"t2", 0.9 * rq}}})
        push(out, q, r);
    } else if (id == "INT_5_5") {
      push(out, q, Row{{"mt", mt}, {"t1", 0.4}, {"t2", -0.3}});
      push(out, q, Row{{"mt", mt}, {"t1", 0.25}, {"t2", 0.15}});
      push(out, q, Row{{"mt", mt}, {"t1_re", 0.3}, {"t1_im", 0.2}, {"t2_re", 0.3}, {"t2_im", -0.2}});
      push(out, q, Row{{"mt", mt}, {"t1", 0.6}, {"t2", 0.35}});
    } else if (id == "INT_5_10") {
      for (const Row& r :
           {Row{{"c1", 0.6}, {"c2", 0.5}, {"c3", -0.4}, {"c4", 0.3}},
            Row{{"c1", 0.7}, {"c2", -0.6}, {"c3", 0.5}, {"c4", -0.4}},
            Row{{"c1", 0.5}, {"c2", 0.5}, {"c3", 0.5}, {"c4", 0.5}},
            Row{{"c1", 0.8}, {"c2", 0.3}, {"c3", -0.2}, {"c4", 0.6}}}) {
        ParamList p{{"q", q}, {"mt", mt}};
        for (int j = 0; j < 4; ++j)
          p.emplace_back(std::string("t") + std::to_string(j + 1),
                         r[j].second * q34);
        out.push_back(std::move(p));
      }
    } else if (id == "INT_5_24") {
      for (const Row& r :
           {Row{{"c1", 0.5}, {"c2", 0.4}, {"c3", 0.3}, {"c4", -0.25}},
            Row{{"c1", 0.6}, {"c2", 0.6}, {"c3", -0.3}, {"c4", 0.2}},
            Row{{"c1", 0.4}, {"c2", 0.3}, {"c3", 0.35}, {"c4", 0.3}},
            Row{{"c1", 0.45}, {"c2", 0.35}, {"c3", 0.2}, {"c4", 0.15}}}) {
        ParamList p{{"q", q}, {"mt", mt}};
        for (int j = 0; j < 4; ++j)
          p.emplace_back(std::string("t") + std::to_string(j + 1), r[j].second * q34);
        out.push_back(std::move(p));
      }
    } else if (id == "SUM_3_7") {
      for (const Row& r : {Row{{"a", -1.0}, {"t1", 0.3}, {"t2", 0.2}},
                           Row{{"a", -0.7}, {"t1", 0.45}, {"t2", -0.3}},
                           Row{{"a", -1.6}, {"t1", 0.2}, {"t2", 0.55}},
                           Row{{"a", -0.4}, {"t1", -0.25}, {"t2", 0.35}}})
        push(out, q, r);
    } else if (id == "ID_2_3") {
      for (const Row& r :
           {Row{{"a_re", 0.5}, {"z_re", 0.3}}, Row{{"a_re", -0.5}, {"z_re", 0.85}},
            Row{{"a_re", 0.9}, {"z_re", -0.8}}, Row{{"a_re", 0.2}, {"a_im", 0.1}, {"z_re", 0.4}, {"z_im", -0.2}},
            Row{{"a_re", 1.5}, {"z_re", 0.5}}, Row{{"a_re", 0.0}, {"z_re", 0.9}},
            Row{{"a_re", -1.2}, {"z_re", -0.6}}})
        push(out, q, r);
    } else if (id == "ID_2_7") {
      for (const Row& r :
           {Row{{"n", 0}, {"a", 0.3}, {"c", 0.7}}, Row{{"n", 1}, {"a", 0.3}, {"c", 0.7}},
            Row{{"n", 2}, {"a", -0.4}, {"c", 0.55}}, Row{{"n", 3}, {"a", 1.3}, {"c", -0.6}},
            Row{{"n", 5}, {"a", 0.8}, {"c", 0.35}}, Row{{"n", 7}, {"a", -0.2}, {"c", -0.5}},
            Row{{"n", 10}, {"a", 0.5}, {"c", 0.9}}})
        push(out, q, r);
    } else if (id == "ID_2_11") {
      for (const Row& r :
           {Row{{"n", 1}, {"theta", 0.6}, {"t1", 0.3}, {"t2", 0.2}},
            Row{{"n", 2}, {"theta", 1.1}, {"t1", -0.5}, {"t2", 0.4}},
            Row{{"n", 3}, {"theta", 2.0}, {"t1", 0.7}, {"t2", -0.6}},
            Row{{"n", 5}, {"theta", 0.3}, {"t1", 0.25}, {"t2", 0.8}},
            Row{{"n", 8}, {"theta", 2.7}, {"t1", -0.4}, {"t2", -0.3}},
            Row{{"n", 12}, {"theta", 1.5}, {"t1", 0.6}, {"t2", 0.5}},
            Row{{"n", 4}, {"theta", 0.9}, {"t1", 0.9}, {"t2", 0.1}}})
        push(out, q, r);
    } else if (id == "ID_2_14") {
      for (const Row& r :
           {Row{{"a_re", 0.3}, {"b_re", 0.5}, {"c_re", 0.7}, {"z_re", 0.6}},
            Row{{"a_re", -0.4}, {"b_re", 0.8}, {"c_re", 0.6}, {"z_re", -0.5}},
            Row{{"a_re", 0.25}, {"b_re", -0.6}, {"c_re", -0.3}, {"z_re", 0.8}},
            Row{{"a_re", 0.9}, {"b_re", 0.3}, {"c_re", 0.5}, {"z_re", 0.4}},
            Row{{"a_re", 0.5}, {"b_re", 0.5}, {"c_re", 0.9}, {"z_re", -0.7}},
            Row{{"a_re", 0.1}, {"b_re", 1.4}, {"c_re", 0.8}, {"z_re", 0.3}},
            Row{{"a_re", -0.8}, {"b_re", -0.2}, {"c_re", 0.4}, {"z_re", 0.5}}})
        push(out, q, r);
    } else if (id == "ID_2_20") {
      for (const Row& r :
           {Row{{"n", 0}, {"a", 0.3}, {"b", 0.5}, {"c", 0.4}, {"d", 0.6}, {"e", 0.7}},
            Row{{"n", 1}, {"a", 0.3}, {"b", 0.5}, {"c", 0.4}, {"d", 0.6}, {"e", 0.7}},
            Row{{"n", 2}, {"a", -0.3}, {"b", 0.4}, {"c", 0.5}, {"d", 0.7}, {"e", 0.6}},
            Row{{"n", 3}, {"a", 0.23}, {"b", 0.3}, {"c", -0.4}, {"d", 0.5}, {"e", 0.8}},
            Row{{"n", 5}, {"a", 0.5}, {"b", 0.4}, {"c", 0.3}, {"d", 0.9}, {"e", 0.6}},
            Row{{"n", 8}, {"a", 0.3}, {"b", -0.2}, {"c", 0.4}, {"d", -0.7}, {"e", 0.5}},
            Row{{"n", 10}, {"a", 0.25}, {"b", 0.3}, {"c", 0.35}, {"d", -0.45}, {"e", 0.55}}})
        push(out, q, r);
    } else if (id == "ID_3_5") {
      for (const Row& r : {Row{{"z_re", 2.0}}, Row{{"z_re", -1.5}},
                           Row{{"z_re", 0.9}, {"z_im", 0.5}}, Row{{"z_re", -0.3}},
                           Row{{"z_re", 1.0}}, Row{{"z_re", 0.5}, {"z_im", -0.8}},
                           Row{{"z_re", 1.8}}})
        push(out, q, r);
    } else if (id == "ID_3_7") {
      // Mostly negative C: positive C near the zeros of (q/C;q)_inf makes the
      // two-piece combination cancel catastrophically.
      for (const Row& r :
           {Row{{"a_re", 0.3}, {"b_re", 0.5}, {"c_re", -0.7}},
            Row{{"a_re", -0.4}, {"b_re", 0.6}, {"c_re", -0.8}},
            Row{{"a_re", 0.2}, {"b_re", 0.9}, {"c_re", -1.6}},
            Row{{"a_re", 0.5}, {"b_re", -0.5}, {"c_re", -0.65}},
            Row{{"a_re", 1.2}, {"b_re", 0.3}, {"c_re", -0.85}},
            Row{{"a_re", 0.7}, {"b_re", 0.4}, {"c_re", -1.3}},
            Row{{"a_re", -0.6}, {"b_re", -0.3}, {"c_re", -0.45}}})
        push(out, q, r);
    } else if (id == "ID_3_14") {
      for (const Row& r :
           {Row{{"n", 1}, {"a", -0.8}, {"t1", 0.3}, {"t2", 0.2}, {"x", 0.7}},
            Row{{"n", 2}, {"a", -1.2}, {"t1", 0.5}, {"t2", -0.4}, {"x", 0.3}},
            Row{{"n", 3}, {"a", -0.5}, {"t1", 0.6}, {"t2", 0.3}, {"x", -0.6}},
            Row{{"n", 5}, {"a", -1.0}, {"t1", 0.25}, {"t2", 0.7}, {"x", 0.9}},
            Row{{"n", 8}, {"a", -0.7}, {"t1", 0.4}, {"t2", 0.5}, {"x", 0.2}},
            Row{{"n", 4}, {"a", -1.4}, {"t1", -0.3}, {"t2", 0.6}, {"x", 0.5}},
            Row{{"n", 6}, {"a", -0.9}, {"t1", 0.2}, {"t2", 0.2}, {"x", -0.8}}})
        push(out, q, r);
    } else if (id == "ID_3_20") {
      for (const Row& r :
           {Row{{"a_re", 2.0}, {"b_re", 1.5}, {"c_re", 0.5}},
            Row{{"a_re", 0.8}, {"b_re", -1.2}, {"c_re", 0.4}},
            Row{{"a_re", 1.5}, {"b_re", 1.5}, {"c_re", 0.9}},
            Row{{"a_re", -2.0}, {"b_re", 0.7}, {"c_re", 0.6}},
            Row{{"a_re", 3.0}, {"b_re", 0.5}, {"c_re", 0.8}},
            Row{{"a_re", 1.2}, {"b_re", 1.1}, {"c_re", 0.35}},
            Row{{"a_re", 2.5}, {"b_re", -1.3}, {"c_re", -0.9}}})
        push(out, q, r);
    } else if (id == "ID_5_9") {
      for (const Row& r :
           {Row{{"xi", 0.0}, {"eta", 0.0}, {"z_re", 0.5}},
            Row{{"xi", 0.3}, {"eta", -0.2}, {"z_re", 0.4}},
            Row{{"xi", -0.5}, {"eta", 0.8}, {"z_re", -0.45}},
            Row{{"xi", 1.0}, {"eta", 0.5}, {"z_re", 0.3}},
            Row{{"xi", 0.2}, {"eta", 0.2}, {"z_re", 0.55}},
            Row{{"xi", -0.3}, {"eta", -0.7}, {"z_re", 0.35}},
            Row{{"xi", 0.6}, {"eta", -0.6}, {"z_re", -0.5}}})
        push(out, q, r);
    } else if (id == "GRAM_2_1" || id == "GRAM_1_17" || id == "GRAM_5_3" ||
               id == "MASS_5_NEXT" || id == "NONNEG_2_1" || id == "NONNEG_1_17" ||
               id == "NONNEG_5_NEXT" || id == "RAD_SZEGO" || id == "RAD_U" ||
               id == "RAD_QINVH" ||
               id.rfind("REP_", 0) == 0) {
      Row r;
      if (id == "RAD_U") r = {{"a", -1.0}};
      push(out, q, r);
    } else if (id == "GRAM_2_9") {
      for (const Row& r : {Row{{"t1", 0.3}, {"t2", 0.2}}, Row{{"t1", -0.6}, {"t2", 0.4}},
                           Row{{"t1", 0.5}, {"t2", 0.5}}})
        push(out, q, r);
    } else if (id == "GRAM_2_18" || id == "NONNEG_2_19") {
      for (const Row& r : {Row{{"t1", 0.3}, {"t2", -0.2}, {"t3", 0.25}, {"t4", 0.1}},
                           Row{{"t1", 0.5}, {"t2", 0.4}, {"t3", -0.3}, {"t4", 0.2}}})
        push(out, q, r);
    } else if (id == "GRAM_3_2" || id == "MASS_3_3" || id == "NONNEG_3_3") {
      for (const Row& r : {Row{{"a", -1.0}}, Row{{"a", -0.6}}, Row{{"a", -1.4}}})
        push(out, q, r);
    } else if (id == "GRAM_3_11") {
      for (const Row& r : {Row{{"a", -0.8}, {"t1", 0.3}, {"t2", 0.2}},
                           Row{{"a", -1.2}, {"t1", 0.4}, {"t2", -0.3}}})
        push(out, q, r);
    } else if (id == "GRAM_3_18_M" || id == "MASS_3_15") {
      push(out, q, Row{{"a", 0.8 * q}});
      push(out, q, Row{{"a", 1.15}});
    } else if (id == "GRAM_3_18_S" || id == "MASS_3_16") {
      push(out, q, Row{{"a", 1.15}});
      push(out, q, Row{{"a", 1.05 / q}});
    } else if (id == "GRAM_5_14") {
      push(out, q, Row{{"mt", mt}, {"t1_re", 0.3}, {"t1_im", 0.2}, {"t2_re", 0.3}, {"t2_im", -0.2}});
      push(out, q, Row{{"mt", mt}, {"t1", 0.4}, {"t2", 0.25}});
      push(out, q, Row{{"mt", mt}, {"t1", mt}});  // the determinate nu(t, 0) case
    } else if (id == "BIGRAM_3_24") {
      for (const Row& r : {Row{{"a", 0.8 * q}, {"t1", 0.35}, {"t2", 0.15}, {"sigma", 0}},
                           Row{{"a", 1.15}, {"t1", 0.35}, {"t2", 0.15}, {"sigma", 0}},
                           Row{{"a", 1.15}, {"t1", 0.45}, {"t2", -0.3}, {"sigma", 1}}})
        push(out, q, r);
    } else if (id == "BIGRAM_4_8") {
      for (const Row& r : {Row{{"c1", 0.4}, {"c2", 0.25}}, Row{{"c1", -0.5}, {"c2", 0.3}}}) {
        ParamList p{{"q", q}};
        p.emplace_back("t1", r[0].second * rq);
        p.emplace_back("t2", r[1].second * rq);
        out.push_back(std::move(p));
      }
    } else if (id == "BIGRAM_5_22") {
      for (const Row& r : {Row{{"t1", 0.3}, {"t2", 0.2}}, Row{{"t1", 0.5}, {"t2", 0.35}},
                           Row{{"t1", 0.25}, {"t2", -0.15}}}) {
        ParamList p{{"q", q}, {"mt", mt}};
        for (const auto& [k, v] : r) p.emplace_back(k, v);
        out.push_back(std::move(p));
      }
    } else if (id == "BIGRAM_5_25") {
      for (const Row& r : {Row{{"c1", 0.6}, {"c2", 0.5}, {"c3", 0.4}, {"c4", 0.3}},
                           Row{{"c1", 0.55}, {"c2", 0.45}, {"c3", -0.35}, {"c4", 0.3}}}) {
        ParamList p{{"q", q}, {"mt", mt}};
        for (int j = 0; j < 4; ++j)
          p.emplace_back(std::string("t") + std::to_string(j + 1), r[j].second * q34);
        out.push_back(std::move(p));
      }
    } else if (id == "GF_1_8") {
      for (const Row& r : {Row{{"x", 0.7}, {"t_re", 0.3}}, Row{{"x", -0.4}, {"t_re", -0.5}},
                           Row{{"x", 0.9}, {"t_re", 0.55}}})
        push(out, q, r);
    } else if (id == "GF_1_9") {
      for (const Row& r : {Row{{"theta", 1.0471975511965976}, {"t_re", 0.4}},
                           Row{{"theta", 1.9}, {"t_re", -0.55}},
                           Row{{"theta", 0.4}, {"t_re", 0.3}, {"t_im", 0.2}}})
        push(out, q, r);
    } else if (id == "GF_2_15") {
      for (const Row& r :
           {Row{{"t1", 0.3}, {"t2", 0.2}, {"theta", 0.8}, {"t_re", 0.35}},
            Row{{"t1", -0.4}, {"t2", 0.5}, {"theta", 2.1}, {"t_re", -0.5}}})
        push(out, q, r);
    } else if (id == "GF_2_21") {
      for (const Row& r :
           {Row{{"t1", 0.3}, {"t2", -0.2}, {"t3", 0.25}, {"t4", 0.1}, {"theta", 1.1}, {"t_re", 0.2}},
            Row{{"t1", 0.5}, {"t2", 0.4}, {"t3", -0.3}, {"t4", 0.2}, {"theta", 0.5}, {"t_re", -0.35}}})
        push(out, q, r);
    } else if (id == "GF_3_1") {
      for (const Row& r : {Row{{"a", -1.0}, {"x", 0.7}, {"t_re", 0.3}},
                           Row{{"a", -0.6}, {"x", -0.5}, {"t_re", 0.45}}})
        push(out, q, r);
    } else if (id == "GF_3_19") {
      for (const Row& r : {Row{{"a", 1.2}, {"x", 1.0}, {"t_re", 0.4}},
                           Row{{"a", 0.5}, {"x", 2.0}, {"t_re", -0.3}}})
        push(out, q, r);
    } else if (id == "GF_4_1") {
      for (const Row& r : {Row{{"ztheta", 0.8}}, Row{{"ztheta", 2.4}}}) {
        ParamList p{{"q", q}, {"t_re", 0.6 * rq}};
        for (const auto& [k, v] : r) p.emplace_back(k, v);
        out.push_back(std::move(p));
      }
    } else if (id == "GF_4_9") {
      for (const Row& r : {Row{{"t1", 0.3}, {"t2", 0.2}, {"ztheta", 1.3}},
                           Row{{"t1", -0.25}, {"t2", 0.4}, {"ztheta", 2.9}}}) {
        ParamList p{{"q", q}, {"t_re", 0.55 * rq}};
        for (const auto& [k, v] : r) p.emplace_back(k, v);
        out.push_back(std::move(p));
      }
    } else if (id == "GF_5_4") {
      for (const Row& r : {Row{{"xi", 0.0}, {"t_re", 0.8}}, Row{{"xi", 0.6}, {"t_re", -1.5}},
                           Row{{"xi", -0.4}, {"t_re", 2.0}}})
        push(out, q, r);
    } else if (id == "GF_5_15") {
      // |t| < q / max |t_i|; take half of the disc.
      for (const Row& r : {Row{{"t1", 0.4}, {"t2", 0.3}, {"xi", 0.3}},
                           Row{{"t1", 0.25}, {"t2", -0.2}, {"xi", -0.5}}}) {
        const double tmax = std::max(std::abs(r[0].second), std::abs(r[1].second));
        ParamList p{{"q", q}, {"t_re", 0.5 * q / tmax}};
        for (const auto& [k, v] : r) p.emplace_back(k, v);
        out.push_back(std::move(p));
      }
    } else if (id == "RAD_V") {
      push(out, q, Row{{"a", 2.0}});
      push(out, q, Row{{"a", 1.3}});
    } else if (id == "MASS_5_7") {
      push(out, q, Row{{"mt", mt}, {"t1_re", 0.3}, {"t1_im", 0.2}, {"t2_re", 0.3}, {"t2_im", -0.2}});
      push(out, q, Row{{"mt", mt}, {"t1", 0.4}, {"t2", -0.3}});
    } else if (id == "NONNEG_2_4") {
      push(out, q, Row{{"t1", 0.45}, {"t2", -0.3}});
    } else if (id == "NONNEG_3_17") {
      push(out, q, Row{{"a", 1.15}, {"gamma", 0.9}});
    } else if (id == "NONNEG_5_7") {
      push(out, q, Row{{"mt", mt}, {"t1_re", 0.3}, {"t1_im", 0.2}});
    } else if (id == "THM_5_2") {
      push(out, q, Row{{"mt", mt}, {"t1_re", 0.3}, {"t1_im", 0.2}, {"t2_re", 0.3}, {"t2_im", -0.2}});
      push(out, q, Row{{"mt", mt}, {"t1", 0.35}, {"t2", 0.2}});
      push(out, q, Row{{"mt", mt}});
    }
  }
  if (out.empty()) info(id);  // throws for unknown ids
  return out;
}

}  // namespace qortho::verify
