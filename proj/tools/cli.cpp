#include "cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <charconv>
#include <fstream>
#include <iomanip>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "linleg/classes.hpp"
#include "linleg/contact.hpp"
#include "linleg/error.hpp"
#include "linleg/lattice.hpp"
#include "linleg/oracle.hpp"
#include "linleg/stable.hpp"

namespace linleg::cli {

namespace {

using nlohmann::json;

// Malformed command-line text (as opposed to a well-formed but
// mathematically invalid query).
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

std::int64_t parse_int(const std::string& text) {
  std::int64_t value = 0;
  const char* first = text.data();
  const char* last = first + text.size();
  if (!text.empty() && text.front() == '+') ++first;
  const auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc() || ptr != last || first == last)
    throw UsageError("not an integer: '" + text + "'");
  return value;
}

std::vector<std::int64_t> parse_ints(const std::string& text, char sep, std::size_t expected) {
  std::vector<std::int64_t> values;
  std::string item;
  std::istringstream in(text);
  while (std::getline(in, item, sep)) values.push_back(parse_int(item));
  if (!text.empty() && text.back() == sep) values.clear();
  if (values.size() != expected)
    throw UsageError("expected " + std::to_string(expected) + " values in '" + text + "'");
  return values;
}

Vec3 parse_vec3(const std::string& text) {
  const auto v = parse_ints(text, ',', 3);
  return {v[0], v[1], v[2]};
}

std::vector<Sign> parse_word(const std::string& text) {
  std::vector<Sign> word;
  for (char ch : text) {
    if (ch == '+') word.push_back(Sign::Plus);
    else if (ch == '-') word.push_back(Sign::Minus);
    else throw UsageError("sign word may contain only '+' and '-'");
  }
  if (word.empty()) throw UsageError("empty sign word");
  return word;
}

std::string sign_string(Sign s) { return std::string(1, to_char(s)); }

json to_json(const LegendrianClass& c) {
  json j = std::visit(
      overloaded{[](const NonVertical& v) {
                   return json{{"kind", "non_vertical"}, {"T", v.T}};
                 },
                 [](const VerticalMax& v) {
                   return json{{"kind", "vertical_max"}, {"component", v.component}};
                 },
                 [](const VerticalPure& v) {
                   return json{{"kind", "vertical_pure"},
                               {"sign", sign_string(v.sign)},
                               {"region", v.region},
                               {"k", v.k}};
                 },
                 [](const VerticalMixed&) { return json{{"kind", "vertical_mixed"}}; }},
      c);
  j["tb"] = tb_of(c);
  j["r"] = rotation_of(c);
  return j;
}

json to_json(const RangeRow& row) {
  return json{{"tb", row.tb}, {"r", row.r}, {"count", row.count}};
}

json to_json(const oracle::VerificationRow& row) {
  return json{{"tb", row.tb}, {"r", row.r}, {"oracle", row.oracle}, {"closed_form", row.closed_form}};
}

// Options shared by every knot-type query.
struct Query {
  std::int64_t n = 0;
  std::string direction;
  std::string out;

  ContactStructure cs() const { return ContactStructure::make(n); }
  Direction dir() const { return Direction::from(parse_vec3(direction)); }

  // `base:p:m` for vertical kinds, `p:m` otherwise.
  Presentation presentation(const std::string& text) const {
    const Direction d = dir();
    Presentation pres{cs(), d, std::nullopt, 0, 0};
    if (d.is_horizontal()) {
      const auto v = parse_ints(text, ':', 3);
      pres.base = v[0];
      pres.p = v[1];
      pres.m = v[2];
    } else {
      const auto v = parse_ints(text, ':', 2);
      pres.p = v[0];
      pres.m = v[1];
    }
    validate(pres);
    return pres;
  }
};

void add_knot_options(CLI::App* sub, Query& q) {
  sub->add_option("--n", q.n, "contact structure index n >= 1")->required();
  sub->add_option("--direction", q.direction, "primitive direction c1,c2,c3")->required();
}

std::string svg_mountain_range(const std::vector<RangeRow>& rows, std::int64_t T,
                               std::int64_t tb_min) {
  const std::int64_t span = T - tb_min;
  const std::int64_t cell = 40, margin = 50;
  const std::int64_t cols = 2 * span + 1, lines = span + 1;
  const std::int64_t width = 2 * margin + cols * cell, height = 2 * margin + lines * cell;

  std::ostringstream s;
  s << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
    << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << width
    << "\" height=\"" << height << "\" viewBox=\"0 0 " << width << ' ' << height << "\">\n"
    << "<rect x=\"0\" y=\"0\" width=\"" << width << "\" height=\"" << height
    << "\" fill=\"white\"/>\n"
    << "<text x=\"" << width / 2 << "\" y=\"" << height - 12
    << "\" font-family=\"sans-serif\" font-size=\"14\" text-anchor=\"middle\">r</text>\n"
    << "<text x=\"14\" y=\"" << height / 2
    << "\" font-family=\"sans-serif\" font-size=\"14\" text-anchor=\"middle\">tb</text>\n";
  for (std::int64_t i = 0; i < lines; ++i) {
    const std::int64_t y = margin + i * cell + cell / 2 + 5;
    s << "<text x=\"" << margin - 6 << "\" y=\"" << y
      << "\" font-family=\"sans-serif\" font-size=\"12\" text-anchor=\"end\">" << T - i
      << "</text>\n";
  }
  for (std::int64_t j = 0; j < cols; ++j) {
    const std::int64_t x = margin + j * cell + cell / 2;
    s << "<text x=\"" << x << "\" y=\"" << margin - 8
      << "\" font-family=\"sans-serif\" font-size=\"12\" text-anchor=\"middle\">" << j - span
      << "</text>\n";
  }
  for (const auto& row : rows) {
    const std::int64_t x = margin + (row.r + span) * cell;
    const std::int64_t y = margin + (T - row.tb) * cell;
    s << "<rect x=\"" << x + 2 << "\" y=\"" << y + 2 << "\" width=\"" << cell - 4
      << "\" height=\"" << cell - 4 << "\" fill=\"#dbe8f5\" stroke=\"#3b6ea5\"/>\n"
      << "<text x=\"" << x + cell / 2 << "\" y=\"" << y + cell / 2 + 5
      << "\" font-family=\"sans-serif\" font-size=\"14\" text-anchor=\"middle\">" << row.count
      << "</text>\n";
  }
  s << "</svg>\n";
  return s.str();
}

std::string range_tsv(const std::vector<RangeRow>& rows) {
  std::ostringstream s;
  s << "tb\tr\tcount\n";
  for (const auto& row : rows) s << row.tb << '\t' << row.r << '\t' << row.count << '\n';
  return s.str();
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Legendrian linear curves in the tight contact structures xi_n on T^3", "linleg"};
  app.require_subcommand(1);

  Query q;
  std::string span, sl_text, tb_text, r_text, extra, word, format = "json";
  std::vector<std::string> pres_texts;
  std::int64_t depth = 0, tb_min = 0;
  bool same_sign = false;

  auto* tbmax = app.add_subcommand("tbmax", "maximal Thurston-Bennequin invariant");
  add_knot_options(tbmax, q);

  auto* profile = app.add_subcommand("dividing-profile", "slope and dividing curve count of a linear torus");
  profile->add_option("--n", q.n, "contact structure index n >= 1")->required();
  profile->add_option("--span", span, "spanning vectors b1,b2,b3:c1,c2,c3")->required();

  auto* count = app.add_subcommand("count", "number of Legendrian classes with given (tb, r)");
  add_knot_options(count, q);
  count->add_option("--tb", tb_text, "Thurston-Bennequin invariant")->required();
  count->add_option("--r", r_text, "rotation number")->required();

  auto* classify = app.add_subcommand("classify", "canonical class of one presentation, or isotopy of two");
  add_knot_options(classify, q);
  classify->add_option("--pres", pres_texts, "base:p:m (vertical) or p:m")->required();

  auto* stab = app.add_subcommand("stabilize", "apply stabilizations to a canonical class");
  add_knot_options(stab, q);
  stab->add_option("--pres", pres_texts, "base:p:m (vertical) or p:m")->required();
  stab->add_option("--sign", word, "letters + and -, applied left to right")->required();

  auto* destab = app.add_subcommand("destabilize", "formal destabilization parents of a class");
  add_knot_options(destab, q);
  destab->add_option("--pres", pres_texts, "base:p:m (vertical) or p:m")->required();

  auto* range = app.add_subcommand("range", "mountain range of class counts");
  add_knot_options(range, q);
  range->add_option("--tb-min", tb_text, "lowest tb to tabulate")->required();
  range->add_option("--format", format, "json, tsv or svg")
      ->check(CLI::IsMember({"json", "tsv", "svg"}));

  auto* merge = app.add_subcommand("stable-merge", "isotopy after common extra stabilizations");
  add_knot_options(merge, q);
  merge->add_option("--pres", pres_texts, "two presentations")->required();
  merge->add_option("--extra", extra, "p:m extra stabilizations; minimal merge if omitted");
  merge->add_flag("--same-sign", same_sign, "search only same-sign stabilizations");

  auto* transverse = app.add_subcommand("transverse", "negative-stable class count or simplicity verdict");
  add_knot_options(transverse, q);
  transverse->add_option("--sl", sl_text, "self-linking level tb - r");

  auto* orc = app.add_subcommand("oracle", "brute-force closure compared with the closed form");
  add_knot_options(orc, q);
  orc->add_option("--depth", depth, "maximal stabilization word length")->required();

  for (auto* sub : app.get_subcommands({})) sub->add_option("--out", q.out, "write output to FILE");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, err, err);
    return kExitUsageError;
  }

  std::string document;
  int status = kExitOk;
  try {
    json j;
    if (tbmax->parsed()) {
      j["tb_max"] = tb_max(q.cs(), q.dir());
    } else if (profile->parsed()) {
      const auto colon = span.find(':');
      if (colon == std::string::npos) throw UsageError("span must look like b1,b2,b3:c1,c2,c3");
      const auto ts = TorusSpan::make(parse_vec3(span.substr(0, colon)), parse_vec3(span.substr(colon + 1)));
      const auto dp = dividing_profile(q.cs(), ts);
      j["slope"] = dp.slope.to_string();
      j["count"] = dp.count;
    } else if (count->parsed()) {
      j["count"] = count_classes(q.cs(), q.dir(), parse_int(tb_text), parse_int(r_text));
    } else if (classify->parsed()) {
      if (pres_texts.size() == 1) {
        j["class"] = to_json(canonicalize(q.presentation(pres_texts[0])));
      } else if (pres_texts.size() == 2) {
        j["isotopic"] = is_isotopic(q.presentation(pres_texts[0]), q.presentation(pres_texts[1]));
      } else {
        throw UsageError("classify takes one or two --pres");
      }
    } else if (stab->parsed()) {
      if (pres_texts.size() != 1) throw UsageError("stabilize takes exactly one --pres");
      const auto cs = q.cs();
      const LegendrianClass start = canonicalize(q.presentation(pres_texts[0]));
      LegendrianClass c = start;
      for (Sign s : parse_word(word)) c = stabilize(cs, c, s);
      j["class"] = to_json(start);
      j["result"] = to_json(c);
    } else if (destab->parsed()) {
      if (pres_texts.size() != 1) throw UsageError("destabilize takes exactly one --pres");
      const auto cs = q.cs();
      const LegendrianClass c = canonicalize(q.presentation(pres_texts[0]));
      json parents = json::array();
      for (const auto& parent : destabilize_parents(cs, c))
        parents.push_back(json{{"class", to_json(parent.cls)}, {"sign", sign_string(parent.sign)}});
      j["class"] = to_json(c);
      j["parents"] = parents;
    } else if (range->parsed()) {
      const auto cs = q.cs();
      const auto d = q.dir();
      const std::int64_t low = parse_int(tb_text);
      const auto rows = enumerate_range(cs, d, low);
      if (format == "tsv") {
        document = range_tsv(rows);
      } else if (format == "svg") {
        document = svg_mountain_range(rows, tb_max(cs, d), low);
      } else {
        json arr = json::array();
        for (const auto& row : rows) arr.push_back(to_json(row));
        j["tb_max"] = tb_max(cs, d);
        j["rows"] = arr;
      }
    } else if (merge->parsed()) {
      if (pres_texts.size() != 2) throw UsageError("stable-merge takes exactly two --pres");
      const auto a = q.presentation(pres_texts[0]);
      const auto b = q.presentation(pres_texts[1]);
      if (!extra.empty()) {
        const auto e = parse_ints(extra, ':', 2);
        j["extra"] = json{{"p", e[0]}, {"m", e[1]}};
        j["isotopic_after"] = becomes_isotopic_after({a, b, e[0], e[1]});
      } else {
        const auto found =
            minimal_mixed_merge(a, b, same_sign ? MergeSearch::SameSignOnly : MergeSearch::Mixed);
        j["minimal"] = found ? json{{"p", found->p}, {"m", found->m}} : json(nullptr);
      }
    } else if (transverse->parsed()) {
      if (!sl_text.empty()) {
        const std::int64_t sl = parse_int(sl_text);
        j["sl"] = sl;
        j["count"] = negative_stable_class_count(q.cs(), q.dir(), sl);
      } else {
        j["transversally_simple"] = is_transversally_simple(q.cs(), q.dir());
      }
    } else if (orc->parsed()) {
      const auto report = oracle::verify_against_closed_form(q.cs(), q.dir(), depth);
      json rows = json::array(), bad = json::array();
      for (const auto& row : report.rows)
        if (row.oracle != 0 || row.closed_form != 0) rows.push_back(to_json(row));
      for (const auto& row : report.mismatches) bad.push_back(to_json(row));
      j["depth"] = report.depth;
      j["classes"] = report.classes;
      j["rows"] = rows;
      j["mismatches"] = bad;
      j["ok"] = report.ok();
    }
    if (document.empty()) document = j.dump() + "\n";
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << "\n";
    return kExitUsageError;
  } catch (const DomainError& e) {
    document = json{{"error", e.what()}}.dump() + "\n";
    status = kExitDomainError;
  }

  if (!q.out.empty()) {
    std::ofstream file(q.out, std::ios::binary);
    if (!file) {
      err << "cannot open " << q.out << " for writing\n";
      return kExitUsageError;
    }
    file << document;
  } else {
    out << document;
  }
  return status;
}

}  // namespace linleg::cli
