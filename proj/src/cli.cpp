#include "qg/cli.hpp"

#include <algorithm>
#include <fstream>
#include <iterator>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"
#include "qg/catalogue.hpp"
#include "qg/errors.hpp"
#include "qg/identities.hpp"
#include "qg/linear.hpp"
#include "qg/parastrophe.hpp"
#include "qg/qq.hpp"
#include "qg/search.hpp"
#include "qg/table_io.hpp"

namespace qg::cli {

  namespace {
    using json = nlohmann::ordered_json;

    struct Output {
      std::ostream& out;
      std::ostream& err;
      bool          as_json   = false;
      bool          one_based = false;

      Int label(Int e) const {
        return one_based ? e + 1 : e;
      }

      json labels(std::span<Element const> v) const {
        json a = json::array();
        for (Element e : v) {
          a.push_back(label(e));
        }
        return a;
      }

      json rows(CayleyTable const& t) const {
        json a = json::array();
        for (Element x = 0; x < t.order(); ++x) {
          a.push_back(labels(t.row(x)));
        }
        return a;
      }
    };

    ////////////////////////////////////////////////////////////////////////
    // Human rendering of a result document
    ////////////////////////////////////////////////////////////////////////

    bool is_scalar(json const& j) {
      return !j.is_object() && !j.is_array();
    }

    bool is_flat(json const& j) {
      return std::all_of(j.begin(), j.end(), is_scalar);
    }

    std::string scalar_text(json const& j) {
      if (j.is_string()) {
        return j.get<std::string>();
      }
      if (j.is_null()) {
        return "-";
      }
      return j.dump();
    }

    std::string inline_text(json const& j) {
      if (is_scalar(j)) {
        return scalar_text(j);
      }
      std::string s = j.is_array() ? "[" : "{";
      bool        first = true;
      for (auto it = j.begin(); it != j.end(); ++it) {
        if (!first) {
          s += ", ";
        }
        first = false;
        if (j.is_object()) {
          s += it.key() + "=";
        }
        s += inline_text(*it);
      }
      return s + (j.is_array() ? "]" : "}");
    }

    bool is_grid(json const& j) {
      return j.is_array() && !j.empty()
             && std::all_of(j.begin(), j.end(), [](json const& r) {
                  return r.is_array() && is_flat(r)
                         && std::all_of(r.begin(), r.end(), [](json const& v) {
                              return v.is_number_integer();
                            });
                });
    }

    void render(json const& j, std::ostream& os, std::string const& indent);

    void render_member(std::string const& key,
                       json const&        v,
                       std::ostream&      os,
                       std::string const& indent) {
      if (is_grid(v)) {
        std::size_t width = 1;
        for (auto const& r : v) {
          for (auto const& e : r) {
            width = std::max(width, e.dump().size());
          }
        }
        os << indent << key << ":\n";
        for (auto const& r : v) {
          os << indent << " ";
          for (auto const& e : r) {
            std::string const s = e.dump();
            os << ' ' << std::string(width - s.size(), ' ') << s;
          }
          os << '\n';
        }
      } else if (is_scalar(v) || (v.is_array() && is_flat(v))
                 || (v.is_object() && is_flat(v))) {
        os << indent << key << ": " << inline_text(v) << '\n';
      } else if (v.is_array()) {
        os << indent << key << ":";
        if (v.empty()) {
          os << " []\n";
          return;
        }
        os << '\n';
        for (auto const& item : v) {
          if (item.is_object() && !is_flat(item)) {
            os << indent << "  -\n";
            render(item, os, indent + "    ");
          } else {
            os << indent << "  - " << inline_text(item) << '\n';
          }
        }
      } else {
        os << indent << key << ":\n";
        render(v, os, indent + "  ");
      }
    }

    void render(json const& j, std::ostream& os, std::string const& indent) {
      for (auto it = j.begin(); it != j.end(); ++it) {
        render_member(it.key(), *it, os, indent);
      }
    }

    void emit(Output const& o, json const& doc) {
      if (o.as_json) {
        o.out << doc.dump(2) << '\n';
      } else {
        render(doc, o.out, "");
      }
    }

    ////////////////////////////////////////////////////////////////////////
    // Shared pieces
    ////////////////////////////////////////////////////////////////////////

    json class_list(std::vector<QClass> const& classes) {
      json a = json::array();
      for (QClass c : classes) {
        a.push_back(std::string(to_string(c)));
      }
      return a;
    }

    json optional_int(std::optional<Int> v) {
      return v ? json(*v) : json(nullptr);
    }

    json coefficients(std::optional<Coefficients> const& c) {
      if (!c) {
        return nullptr;
      }
      return json{{"a", c->a}, {"b", c->b}};
    }

    json witness(Witness const& w) {
      return json{{"n", w.n}, {"a", w.a}};
    }

    json witnesses(std::vector<Witness> const& ws) {
      json a = json::array();
      for (auto const& w : ws) {
        a.push_back(witness(w));
      }
      return a;
    }

    json ints(std::span<Int const> v) {
      return json(std::vector<Int>(v.begin(), v.end()));
    }

    CayleyTable load_table(std::string const& path) {
      std::ifstream in(path);
      if (!in) {
        throw Error("cannot read " + path);
      }
      std::string const text((std::istreambuf_iterator<char>(in)),
                             std::istreambuf_iterator<char>());
      auto const first = text.find_first_not_of(" \t\r\n");
      if (first != std::string::npos && text[first] == '{') {
        return table_from_json(text);
      }
      return table_from_csv(text);
    }

    void require_in_range(Int n, std::initializer_list<Int> values) {
      if (n < 1) {
        throw RangeError("n must be at least 1");
      }
      for (Int v : values) {
        if (v < 0 || v >= n) {
          throw RangeError("coefficient " + std::to_string(v)
                           + " outside [0, n)");
        }
      }
    }

    ////////////////////////////////////////////////////////////////////////
    // Verbs
    ////////////////////////////////////////////////////////////////////////

    struct ClassifyArgs {
      Int                n = 0;
      Int                a = 0;
      std::optional<Int> b;
    };

    int classify_verb(ClassifyArgs const& args, Output const& o) {
      require_in_range(args.n, {args.a});
      Int const b = mod(1 - args.a, args.n);
      if (args.b && mod(*args.b, args.n) != b) {
        throw CriterionViolated("b must equal 1 - a (mod n) = "
                                + std::to_string(b));
      }
      if (args.n % 2 == 0) {
        throw NotAQuasigroup(
            "even order rejected for classification: an idempotent "
            "translatable linear quasigroup has odd order");
      }
      auto const classes = classify(args.n, args.a);

      json per_class = json::object();
      for (QClass c : classes) {
        per_class[std::string(to_string(c))]
            = optional_int(k_for_class(args.n, args.a, c));
      }
      json doc{{"n", args.n},
               {"a", args.a},
               {"b", b},
               {"classes", class_list(classes)},
               {"k", optional_int(translatable_k(args.n, args.a, b))},
               {"commutative", args.a == b},
               {"class_k", per_class}};
      emit(o, doc);
      return ok;
    }

    int construct_verb(Int n, Int k, Output const& o) {
      if (n < 2 || k < 1 || k >= n) {
        throw RangeError("construct needs n >= 2 and 1 <= k < n");
      }
      auto const c = solve_from_k(n, k);
      if (!c) {
        emit(o,
             json{{"n", n},
                  {"k", k},
                  {"exists", false},
                  {"reason", "gcd(k - 1, n) != 1"}});
        o.err << "no idempotent " << k << "-translatable linear groupoid of "
              << "order " << n << '\n';
        return violation;
      }
      CayleyTable const t = build(n, c->a, c->b);
      json              doc{{"n", n},
                            {"k", k},
                            {"exists", true},
                            {"a", c->a},
                            {"b", c->b},
                            {"quasigroup", is_quasigroup(t)},
                            {"idempotent", is_idempotent(t)},
                            {"translatability", translatability(t).ks},
                            {"rows", o.rows(t)}};
      emit(o, doc);
      return ok;
    }

    int parastrophe_verb(Int n, Int a, Int b, std::string const& which,
                         Output const& o) {
      require_in_range(n, {a, b});
      std::vector<ParastropheKind> kinds;
      if (which == "all") {
        kinds.assign(all_parastrophes.begin(), all_parastrophes.end());
      } else {
        int i = 0;
        try {
          i = std::stoi(which);
        } catch (std::exception const&) {
        }
        auto const k = parastrophe_from_index(i);
        if (!k) {
          throw RangeError("--which must be 1..5 or all");
        }
        kinds.push_back(*k);
      }

      CayleyTable const t        = build(n, a, b);
      auto const        predicted = equality_case(n, a, b);
      bool const        pattern_ok
          = observed_pattern(t) == expected_pattern(predicted);
      bool all_match = pattern_ok;

      json list = json::array();
      for (auto kind : kinds) {
        auto const        c  = parastrophe_coeffs(n, a, b, kind);
        CayleyTable const pt = parastrophe_table(t, kind);
        auto const        lin = recover_linear(pt);
        auto const        ks  = translatability(pt).ks;
        bool const        match
            = lin == Coefficients{c.a, c.b} && ks == std::vector<Int>{c.kstar};
        all_match = all_match && match;
        json entry{{"kind", std::string(to_string(kind))},
                   {"a", c.a},
                   {"b", c.b},
                   {"kstar", c.kstar},
                   {"table_coefficients", coefficients(lin)},
                   {"table_translatability", ks},
                   {"match", match}};
        if (kinds.size() == 1) {
          entry["rows"] = o.rows(pt);
        }
        list.push_back(entry);
      }
      json doc{{"n", n},
               {"a", a},
               {"b", b},
               {"k", optional_int(translatable_k(n, a, b))},
               {"equality_case", std::string(to_string(predicted))},
               {"equality_case_holds", pattern_ok},
               {"parastrophes", list}};
      emit(o, doc);
      if (!all_match) {
        o.err << "closed form disagrees with the parastrophe tables\n";
        return violation;
      }
      return ok;
    }

    int enumerate_verb(Int n, Int k, bool all_k, Output const& o) {
      std::vector<Int> ks;
      if (all_k) {
        for (Int j = 1; j < n; ++j) {
          ks.push_back(j);
        }
      } else {
        ks.push_back(k);
      }
      json results = json::array();
      for (Int j : ks) {
        auto const r    = enumerate(n, j);
        json       list = json::array();
        for (std::size_t i = 0; i < r.tables.size(); ++i) {
          list.push_back(json{{"first_row", o.labels(r.tables[i].row(0))},
                              {"linear", coefficients(r.linear_matches[i])}});
        }
        auto const c = solve_from_k(n, j);
        results.push_back(json{{"k", j},
                               {"survivors", r.tables.size()},
                               {"closed_form", coefficients(c)},
                               {"tables", list}});
      }
      emit(o, json{{"n", n}, {"results", results}});
      return ok;
    }

    int oracle_verb(Int max_n, Output const& o) {
      auto const report = oracle_vs_closed_form(max_n);
      json       rows   = json::array();
      for (auto const& r : report.rows) {
        rows.push_back(json{{"n", r.n},
                            {"k", r.k},
                            {"survivors", r.survivors},
                            {"closed_form", coefficients(r.closed_form)},
                            {"closed_form_is_quasigroup",
                             r.closed_form_is_quasigroup},
                            {"pairwise_isomorphic", r.pairwise_isomorphic},
                            {"matches", r.matches}});
      }
      emit(o, json{{"max_n", report.max_n}, {"rows", rows}});
      return ok;
    }

    json translatability_table_doc(TranslatabilitySweep const& s) {
      json mismatches = json::array();
      for (auto const& m : s.mismatches) {
        mismatches.push_back(json{{"class", std::string(to_string(m.cls))},
                                  {"at", witness(m.at)},
                                  {"formula", ints(m.formula)},
                                  {"observed", ints(m.observed)}});
      }
      return json{{"table", s.table},
                  {"rows_checked", s.rows_checked},
                  {"tables_scanned", s.tables_scanned},
                  {"mismatches", mismatches}};
    }

    std::string_view claim_name(CellClaim c) {
      switch (c) {
        case CellClaim::Always:
          return "always";
        case CellClaim::Never:
          return "never";
        case CellClaim::Instance:
          return "instance";
      }
      return "";
    }

    int verify_tables_verb(Int max_n, int table, Int scan_limit,
                           Output const& o) {
      if (table < 0 || table > 3) {
        throw RangeError("--table must be 1, 2 or 3");
      }
      bool consistent = true;
      json doc{{"max_n", max_n}};
      for (int which : {1, 2}) {
        if (table != 0 && table != which) {
          continue;
        }
        auto const s = verify_translatability_table(which, max_n, scan_limit);
        consistent   = consistent && s.mismatches.empty();
        doc["table" + std::to_string(which)] = translatability_table_doc(s);
      }
      if (table == 0 || table == 3) {
        json cells = json::array();
        for (QClass cls : table3_classes) {
          for (auto kind : all_parastrophes) {
            auto const v = verify_table3_cell(cls, kind, max_n);
            consistent   = consistent && v.consistent();
            json cell{{"class", std::string(to_string(cls))},
                      {"kind", std::string(to_string(kind))},
                      {"claim", std::string(claim_name(v.expected.claim))},
                      {"instances", v.instances},
                      {"same_type", v.witnesses.size()},
                      {"consistent", v.consistent()}};
            if (v.expected.instance) {
              cell["claimed"] = witness(*v.expected.instance);
            }
            if (v.expected.claim != CellClaim::Always) {
              cell["witnesses"] = witnesses(v.witnesses);
            }
            cells.push_back(cell);
          }
        }
        auto const hex = hexagonal_closure_violations(max_n);
        consistent     = consistent && hex.empty();
        doc["table3"]  = json{{"cells", cells},
                              {"hexagonal_closure_violations", witnesses(hex)}};
      }
      doc["consistent"] = consistent;
      emit(o, doc);
      if (!consistent) {
        o.err << "table check failed\n";
        return violation;
      }
      return ok;
    }

    std::string_view pair_claim_name(PairClaim c) {
      switch (c) {
        case PairClaim::Unstated:
          return "unstated";
        case PairClaim::Empty:
          return "empty";
        case PairClaim::Unique:
          return "unique";
      }
      return "";
    }

    int survey_verb(Int max_n, Output const& o) {
      auto const surveys    = class_pair_survey(max_n);
      bool       consistent = true;
      json       pairs      = json::array();
      for (auto const& s : surveys) {
        json entry{{"first", std::string(to_string(s.first))},
                   {"second", std::string(to_string(s.second))},
                   {"claim", std::string(pair_claim_name(s.claim))}};
        if (s.claimed_witness) {
          entry["claimed"] = witness(*s.claimed_witness);
        }
        entry["witness_count"] = s.witnesses.size();
        entry["witnesses"]     = witnesses(s.witnesses);
        entry["consistent"]    = s.consistent();
        pairs.push_back(entry);
        if (!s.consistent()) {
          consistent = false;
          o.err << "counterexample: " << to_string(s.first) << " and "
                << to_string(s.second) << " claimed "
                << pair_claim_name(s.claim) << ", found";
          for (auto const& w : s.witnesses) {
            o.err << " (" << w.n << "," << w.a << ")";
          }
          o.err << '\n';
        }
      }
      emit(o, json{{"max_n", max_n}, {"pairs", pairs}, {"consistent", consistent}});
      return consistent ? ok : violation;
    }

    int nonexistence_verb(Int max_n, Output const& o) {
      auto const r = cheban_schroeder_check(max_n);
      emit(o,
           json{{"max_n", r.max_n},
                {"orders_scanned", r.orders_scanned},
                {"instances_scanned", r.instances_scanned},
                {"cheban_witnesses", r.cheban_witnesses},
                {"schroeder_witnesses", r.schroeder_witnesses}});
      return ok;
    }

    int orders_verb(std::string const& name, Int limit, Output const& o) {
      auto const cls = class_from_string(name);
      if (!cls) {
        throw RangeError("unknown class " + name);
      }
      std::vector<Int> swept;
      for (auto const& w : sweep(limit, [c = *cls](Int n, Int a) {
             return satisfies_criterion(n, a, c);
           })) {
        if (swept.empty() || swept.back() != w.n) {
          swept.push_back(w.n);
        }
      }
      json doc{{"class", name}, {"limit", limit}, {"orders", swept}};
      if (*cls == QClass::Quadratical) {
        auto const factored     = quadratical_orders(limit);
        doc["factorization"]    = factored;
        doc["agrees"]           = factored == swept;
        if (factored != swept) {
          emit(o, doc);
          o.err << "factorization and sweep disagree\n";
          return violation;
        }
      }
      emit(o, doc);
      return ok;
    }

    json axioms_doc(QQAxioms const& ax) {
      return json{{"exchange", ax.exchange},
                  {"diagonal", ax.diagonal},
                  {"symmetric", ax.symmetric},
                  {"solvable", ax.solvable},
                  {"automorphisms", ax.automorphisms},
                  {"commute", ax.commute}};
    }

    json companion_doc(CompanionReport const& c, Output const& o) {
      return json{{"constant", c.constant},
                  {"companion", o.label(c.companion)},
                  {"lam_is_left_translation", c.lam_is_left_translation},
                  {"rho_is_right_translation", c.rho_is_right_translation}};
    }

    // Round trip and law checks for one A-structure; names of failing
    // checks are appended to failures.
    json astructure_doc(AStructure const&          a,
                        std::vector<std::string>& failures,
                        Output const&             o) {
      CayleyTable const t = psi(a);
      QQStructure const q{t, multiplier_map(a.n, a.l), multiplier_map(a.n, a.r)};
      auto const        ax        = check_qq_axioms(q.table, q.lam, q.rho);
      auto const        group     = phi(q);
      auto const        back      = as_cyclic(group);
      bool const        roundtrip = back && *back == a;
      std::optional<bool> equivalence;
      if (a.n <= 31) {
        equivalence = check_equivalence_law(a);
      }
      bool const medial    = check_medial_transfer(a);
      bool const rotation  = check_rotation_identity(a);
      bool const halving   = check_halving(a);
      auto const companion = check_companion(q);
      bool const quad      = has_class(t, QClass::Quadratical);

      std::string const tag = "(" + std::to_string(a.n) + ", "
                              + std::to_string(a.l) + ", "
                              + std::to_string(a.r) + ") ";
      for (auto const& [name, passed] :
           {std::pair{"quadratical", quad},
            std::pair{"axioms", ax.all()},
            std::pair{"round_trip", roundtrip},
            std::pair{"equivalence_law", equivalence.value_or(true)},
            std::pair{"medial_transfer", medial},
            std::pair{"rotation_identity", rotation},
            std::pair{"halving", halving},
            std::pair{"companion", companion.holds()}}) {
        if (!passed) {
          failures.push_back(tag + name);
        }
      }
      return json{{"n", a.n},
                  {"l", a.l},
                  {"r", a.r},
                  {"quadratical", quad},
                  {"axioms", axioms_doc(ax)},
                  {"group_identity", o.label(group.identity)},
                  {"round_trip", roundtrip},
                  {"equivalence_law",
                   equivalence ? json(*equivalence) : json(nullptr)},
                  {"medial_transfer", medial},
                  {"rotation_identity", rotation},
                  {"halving", halving},
                  {"companion", companion_doc(companion, o)}};
    }

    struct QQArgs {
      std::optional<Int>         n;
      std::optional<Int>         l;
      std::optional<Int>         r;
      std::optional<std::string> from_table;
      std::optional<Int>         s;
    };

    int qq_verb(QQArgs const& args, Output const& o) {
      if (args.from_table) {
        if (!args.s) {
          throw RangeError("--from-table needs --s");
        }
        CayleyTable const t = load_table(*args.from_table);
        Int const         s = o.one_based ? *args.s - 1 : *args.s;
        if (s < 0 || s >= static_cast<Int>(t.order())) {
          throw RangeError("--s outside the carrier");
        }
        auto const [lam, rho] = translation_maps(t, static_cast<Element>(s));
        auto const ax         = check_qq_axioms(t, lam, rho);
        QQStructure const q{t, lam, rho};
        json doc{{"n", t.order()},
                 {"s", o.label(s)},
                 {"lam", o.labels(lam)},
                 {"rho", o.labels(rho)},
                 {"axioms", axioms_doc(ax)}};
        if (!ax.all()) {
          emit(o, doc);
          o.err << "translation maps of " << o.label(s)
                << " do not satisfy the QQ axioms\n";
          return violation;
        }
        auto const group     = phi(q);
        auto const cyclic    = as_cyclic(group);
        auto const companion = check_companion(q);
        doc["group_identity"] = o.label(group.identity);
        doc["cyclic"]
            = cyclic ? json{{"l", cyclic->l}, {"r", cyclic->r}} : json(nullptr);
        doc["companion"] = companion_doc(companion, o);
        emit(o, doc);
        return companion.holds() ? ok : violation;
      }

      if (!args.n) {
        throw RangeError("qq needs --n or --from-table");
      }
      Int const n = *args.n;
      if (args.l.has_value() != args.r.has_value()) {
        throw RangeError("--l and --r go together");
      }
      std::vector<std::string> failures;
      json                     list = json::array();
      if (args.l) {
        if (!validate_astructure(n, *args.l, *args.r)) {
          emit(o, json{{"n", n}, {"l", *args.l}, {"r", *args.r}, {"valid", false}});
          o.err << "(" << n << ", " << *args.l << ", " << *args.r
                << ") is not an A-structure\n";
          return violation;
        }
        list.push_back(astructure_doc({n, *args.l, *args.r}, failures, o));
      } else {
        for (auto const& a : astructures(n)) {
          list.push_back(astructure_doc(a, failures, o));
        }
      }
      emit(o,
           json{{"n", n}, {"structures", list}, {"all_hold", failures.empty()}});
      for (auto const& f : failures) {
        o.err << "fails: " << f << '\n';
      }
      return failures.empty() ? ok : violation;
    }

    int check_verb(std::optional<std::string> const& path, Output const& o) {
      if (path) {
        CayleyTable const t  = load_table(*path);
        bool const        qg = is_quasigroup(t);
        json              ids = json::array();
        for (auto id : all_identities) {
          if (check_identity(t, id)) {
            ids.push_back(std::string(to_string(id)));
          }
        }
        std::vector<QClass> classes;
        if (qg) {
          for (QClass c : all_classes) {
            if (has_class(t, c)) {
              classes.push_back(c);
            }
          }
        }
        emit(o,
             json{{"n", t.order()},
                  {"quasigroup", qg},
                  {"idempotent", is_idempotent(t)},
                  {"commutative", is_commutative(t)},
                  {"left_cancellative", is_left_cancellative(t)},
                  {"right_cancellative", is_right_cancellative(t)},
                  {"translatability", translatability(t).ks},
                  {"linear", coefficients(recover_linear(t))},
                  {"identities", ids},
                  {"classes", class_list(classes)}});
        return ok;
      }

      bool all_pass = true;
      json list     = json::array();
      for (auto const& v : report_named_examples()) {
        json checks = json::object();
        for (auto const& [name, passed] : v.checks) {
          checks[name] = passed;
        }
        list.push_back(json{{"name", v.name},
                            {"claim", v.claim},
                            {"checks", checks},
                            {"pass", v.pass()}});
        if (!v.pass()) {
          all_pass = false;
          o.err << "FAIL " << v.name << '\n';
        }
      }
      emit(o, json{{"instances", list}, {"all_pass", all_pass}});
      return all_pass ? ok : violation;
    }
  }  // namespace

  int run(std::vector<std::string> const& args,
          std::ostream&                   out,
          std::ostream&                   err) {
    CLI::App app{"Idempotent k-translatable quasigroups on Z_n", "qg"};
    app.require_subcommand(1);
    app.fallthrough();
    Output o{out, err};
    app.add_flag("--json", o.as_json, "Print results as JSON");
    app.add_flag("--one-based", o.one_based,
                 "Label elements 1..n instead of 0..n-1");

    std::function<int()> action;

    ClassifyArgs classify_args;
    auto*        classify_cmd
        = app.add_subcommand("classify", "Types of x.y = ax + (1-a)y on Z_n");
    classify_cmd->add_option("--n", classify_args.n, "Order")->required();
    classify_cmd->add_option("--a", classify_args.a, "Left coefficient")
        ->required();
    classify_cmd->add_option("--b", classify_args.b,
                             "Right coefficient, must equal 1 - a");
    classify_cmd->callback(
        [&] { action = [&] { return classify_verb(classify_args, o); }; });

    Int  construct_n = 0, construct_k = 0;
    auto construct_cmd = app.add_subcommand(
        "construct", "The idempotent k-translatable linear groupoid of order n");
    construct_cmd->add_option("--n", construct_n, "Order")->required();
    construct_cmd->add_option("--k", construct_k, "Translatability")->required();
    construct_cmd->callback([&] {
      action = [&] { return construct_verb(construct_n, construct_k, o); };
    });

    Int         para_n = 0, para_a = 0, para_b = 0;
    std::string para_which = "all";
    auto        para_cmd   = app.add_subcommand(
        "parastrophe", "Parastrophes of ax + by: closed form against tables");
    para_cmd->add_option("--n", para_n, "Order")->required();
    para_cmd->add_option("--a", para_a, "Left coefficient")->required();
    para_cmd->add_option("--b", para_b, "Right coefficient")->required();
    para_cmd->add_option("--which", para_which, "1..5 or all (default all)");
    para_cmd->callback([&] {
      action = [&] {
        return parastrophe_verb(para_n, para_a, para_b, para_which, o);
      };
    });

    Int  enum_n = 0, enum_k = 1;
    bool enum_all = false;
    auto enum_cmd = app.add_subcommand(
        "enumerate", "Brute-force idempotent k-translatable quasigroups (n <= 9)");
    enum_cmd->add_option("--n", enum_n, "Order")->required();
    enum_cmd->add_option("--k", enum_k, "Translatability");
    enum_cmd->add_flag("--all-k", enum_all, "Every k in 1..n-1");
    enum_cmd->callback([&] {
      action = [&] { return enumerate_verb(enum_n, enum_k, enum_all, o); };
    });

    Int  oracle_max = 7;
    auto oracle_cmd = app.add_subcommand(
        "oracle", "Enumeration against the closed form for every n, k");
    oracle_cmd->add_option("--max-n", oracle_max, "Largest order, at most 9 (default 7)");
    oracle_cmd->callback(
        [&] { action = [&] { return oracle_verb(oracle_max, o); }; });

    Int  tables_max = 50, tables_scan = 31;
    int  tables_which = 0;
    auto tables_cmd   = app.add_subcommand(
        "verify-tables", "Translatability and same-type parastrophe tables");
    tables_cmd->add_option("--max-n", tables_max, "Largest order (default 50)");
    tables_cmd->add_option("--table", tables_which, "1, 2 or 3 (default all)");
    tables_cmd->add_option("--scan-limit", tables_scan,
                           "Scan actual tables up to this order (default 31)");
    tables_cmd->callback([&] {
      action = [&] {
        return verify_tables_verb(tables_max, tables_which, tables_scan, o);
      };
    });

    Int  survey_max   = 200;
    bool survey_pairs = false;
    auto survey_cmd   = app.add_subcommand(
        "survey", "Which pairs of types coexist (default max-n 200)");
    survey_cmd->add_flag("--pairs", survey_pairs, "Survey pairs of types")
        ->required();
    survey_cmd->add_option("--max-n", survey_max, "Largest order (default 200)");
    survey_cmd->callback(
        [&] { action = [&] { return survey_verb(survey_max, o); }; });

    Int  nonex_max = 101;
    auto nonex_cmd = app.add_subcommand(
        "nonexistence", "No Cheban or Schroeder instances (default max-n 101)");
    nonex_cmd->add_option("--max-n", nonex_max, "Largest order (default 101)");
    nonex_cmd->callback(
        [&] { action = [&] { return nonexistence_verb(nonex_max, o); }; });

    std::string orders_class = "quadratical";
    Int         orders_limit = 200;
    auto        orders_cmd
        = app.add_subcommand("orders", "Orders admitting a type (default limit 200)");
    orders_cmd->add_option("--class", orders_class, "Type name");
    orders_cmd->add_option("--limit", orders_limit, "Largest order (default 200)");
    orders_cmd->callback([&] {
      action = [&] { return orders_verb(orders_class, orders_limit, o); };
    });

    QQArgs qq_args;
    auto   qq_cmd = app.add_subcommand(
        "qq", "Quadratical quasigroups with automorphism pairs");
    qq_cmd->add_option("--n", qq_args.n, "Order");
    qq_cmd->add_option("--l", qq_args.l, "lam multiplier");
    qq_cmd->add_option("--r", qq_args.r, "rho multiplier");
    qq_cmd->add_option("--from-table", qq_args.from_table,
                       "Cayley table file (JSON or CSV)");
    qq_cmd->add_option("--s", qq_args.s, "Element whose translations are used");
    qq_cmd->callback([&] { action = [&] { return qq_verb(qq_args, o); }; });

    std::optional<std::string> check_table;
    auto                       check_cmd = app.add_subcommand(
        "check", "Named instance catalogue, or properties of a table file");
    check_cmd->add_option("--table", check_table, "Cayley table file");
    check_cmd->callback(
        [&] { action = [&] { return check_verb(check_table, o); }; });

    try {
      std::vector<std::string> reversed(args.rbegin(), args.rend());
      app.parse(reversed);
    } catch (CLI::CallForHelp const& e) {
      return app.exit(e, out, err);
    } catch (CLI::CallForAllHelp const& e) {
      return app.exit(e, out, err);
    } catch (CLI::ParseError const& e) {
      app.exit(e, out, err);
      return usage;
    }

    try {
      return action();
    } catch (CounterexampleFound const& e) {
      err << "counterexample: " << e.what() << '\n';
      return violation;
    } catch (DiscrepancyFound const& e) {
      err << "discrepancy: " << e.what() << '\n';
      return violation;
    } catch (QQAxiomViolation const& e) {
      err << "axiom violated: " << e.what() << '\n';
      return violation;
    } catch (Error const& e) {
      err << "error: " << e.what() << '\n';
      return usage;
    }
  }

}  // namespace qg::cli
