#include "grouptype/commands.hpp"

#include <algorithm>
#include <cstdlib>
#include <future>
#include <iomanip>
#include <map>
#include <numeric>
#include <ostream>
#include <sstream>

#include "grouptype/constructors.hpp"
#include "grouptype/errors.hpp"
#include "grouptype/grp_file.hpp"
#include "grouptype/spectra.hpp"

#ifndef GROUPTYPE_DEFAULT_DATA_DIR
#define GROUPTYPE_DEFAULT_DATA_DIR "data"
#endif

namespace grouptype {

namespace {

using ordered_json = nlohmann::ordered_json;

std::optional<std::uint64_t> numeric_suffix(const std::string& s, std::size_t prefix) {
  if (s.size() <= prefix) return std::nullopt;
  std::uint64_t value = 0;
  for (std::size_t k = prefix; k < s.size(); ++k) {
    if (s[k] < '0' || s[k] > '9' || value > 1'000'000'000) return std::nullopt;
    value = value * 10 + static_cast<std::uint64_t>(s[k] - '0');
  }
  return value;
}

std::shared_ptr<const FiniteGroup> shared(FiniteGroup g) {
  return std::make_shared<const FiniteGroup>(std::move(g));
}

std::vector<bool> solvability(const std::vector<std::shared_ptr<const FiniteGroup>>& groups) {
  std::vector<std::future<bool>> pending;
  for (const auto& g : groups) {
    pending.push_back(std::async(std::launch::async, [g] { return is_solvable(g); }));
  }
  std::vector<bool> out;
  for (auto& f : pending) out.push_back(f.get());
  return out;
}

std::string yes_no(bool b) { return b ? "yes" : "no"; }

ordered_json counts_object(const Spectrum& s) {
  ordered_json obj = ordered_json::object();
  for (std::size_t k = 0; k < s.divisors().size(); ++k) obj[std::to_string(s.divisors()[k])] = s.counts()[k];
  return obj;
}

void print_json(std::ostream& out, const ordered_json& j) { out << j.dump(2) << '\n'; }

// Shared error mapping for every subcommand.
template <class F>
int guarded(std::ostream& err, F&& body) {
  try {
    return body();
  } catch (const CountOverflow& e) {
    err << "error: " << e.what() << '\n';
    return kExitOverflow;
  } catch (const OrderOverflow& e) {
    err << "error: " << e.what() << '\n';
    return kExitOverflow;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitDataError;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kExitDataError;
  }
}

}  // namespace

std::filesystem::path default_data_dir(const std::optional<std::string>& flag) {
  if (flag && !flag->empty()) return *flag;
  if (const char* env = std::getenv("GROUPTYPE_DATA"); env && *env) return env;
  return GROUPTYPE_DEFAULT_DATA_DIR;
}

std::shared_ptr<const FiniteGroup> resolve_target(const std::string& target,
                                                  const std::filesystem::path& data_dir,
                                                  std::ostream* warnings) {
  if (target.size() == 2 && target[0] == 's' && target[1] >= '1' && target[1] <= '7') {
    return build_catalog_group(target, data_dir);
  }
  if (target.starts_with("pgl2_")) {
    if (auto p = numeric_suffix(target, 5)) return shared(pgl2(static_cast<std::uint32_t>(*p)).with_label(target));
  }
  const bool looks_like_file = target.ends_with(".grp") || target.find('/') != std::string::npos;
  if (!looks_like_file && !target.empty()) {
    if (auto n = numeric_suffix(target, 1)) {
      switch (target[0]) {
        case 'c':
          return shared(cyclic(*n).with_label(target));
        case 'd':
          return shared(dihedral(*n).with_label(target));
        case 'q':
          return shared(generalized_quaternion(*n).with_label(target));
        case 'a':
          return shared(alternating(static_cast<std::uint32_t>(*n)).with_label(target));
        default:
          break;
      }
    }
  }
  if (std::filesystem::exists(target)) {
    auto file = read_grp(target);
    if (warnings) {
      for (const auto& w : file.warnings) *warnings << "warning: " << w << '\n';
    }
    return shared(group_from_grp(file, target));
  }
  throw UnknownTarget("unknown target '" + target + "' (not a builtin name or an existing .grp file)");
}

// ------------------------------------------------------------------- verify

std::optional<std::uint64_t> VerificationReport::first_failing_divisor() const {
  for (const auto& row : per_divisor) {
    if (!row.equal) return row.n;
  }
  return std::nullopt;
}

bool VerificationReport::claims_hold() const {
  bool s7_solvable = true;
  for (const auto& f : right_factors) {
    if (f.label == "s7") s7_solvable = f.solvable;
  }
  return conclusion && order_types_equal && left_solvable && !s7_solvable;
}

std::string VerificationReport::first_failure() const {
  if (auto n = first_failing_divisor()) {
    for (const auto& row : per_divisor) {
      if (row.n == *n) {
        return "exponent-type products differ at divisor " + std::to_string(*n) + ": " +
               std::to_string(row.left_product) + " != " + std::to_string(row.right_product);
      }
    }
  }
  if (left_order != right_order) {
    return "orders differ: " + std::to_string(left_order) + " != " + std::to_string(right_order);
  }
  if (left_exponent != right_exponent) {
    return "exponents differ: " + std::to_string(left_exponent) + " != " + std::to_string(right_exponent);
  }
  if (!order_types_equal) return "order types differ";
  for (const auto& f : left_factors) {
    if (!f.solvable) return "left factor " + f.label + " is not solvable";
  }
  for (const auto& f : right_factors) {
    if (f.label == "s7" && f.solvable) return "s7 is solvable";
  }
  return {};
}

VerificationReport build_verification_report(const std::vector<CatalogMember>& catalog) {
  const auto lists = factor_lists(catalog);
  VerificationReport report;

  auto side = [](const std::vector<const CatalogMember*>& members, std::uint64_t& order,
                 std::uint64_t& exp, std::vector<FactorSolvability>& factors, bool& all_solvable) {
    std::vector<Spectrum> spectra;
    std::vector<std::shared_ptr<const FiniteGroup>> groups;
    order = 1;
    exp = 1;
    for (const auto* m : members) {
      spectra.push_back(exponent_type(*m->group));
      groups.push_back(m->group);
      if (__builtin_mul_overflow(order, m->group->order(), &order)) {
        throw OrderOverflow("product of factor orders overflows 64 bits");
      }
      exp = std::lcm(exp, m->group->exponent());
    }
    const auto solvable = solvability(groups);
    all_solvable = true;
    for (std::size_t k = 0; k < members.size(); ++k) {
      factors.push_back({members[k]->entry.label, solvable[k]});
      all_solvable = all_solvable && solvable[k];
    }
    return spectrum_product(spectra);
  };

  const auto left = side(lists.left, report.left_order, report.left_exponent, report.left_factors,
                         report.left_solvable);
  const auto right = side(lists.right, report.right_order, report.right_exponent, report.right_factors,
                          report.right_solvable);

  report.divisors = divisors(std::lcm(left.modulus(), right.modulus())).divisors;
  bool all_equal = true;
  for (auto n : report.divisors) {
    DivisorRow row{n, e_at(left, n), e_at(right, n), false};
    row.equal = row.left_product == row.right_product;
    all_equal = all_equal && row.equal;
    report.per_divisor.push_back(row);
  }
  report.order_types_equal = spectra_equal(order_from_exponent(left), order_from_exponent(right));
  for (const auto& m : catalog) report.catalog_issues.insert(report.catalog_issues.end(), m.issues.begin(), m.issues.end());
  report.conclusion = all_equal && report.left_order == report.right_order &&
                      report.left_exponent == report.right_exponent;
  return report;
}

ordered_json to_json(const VerificationReport& report) {
  ordered_json j;
  j["divisors"] = report.divisors;
  ordered_json rows = ordered_json::array();
  for (const auto& row : report.per_divisor) {
    rows.push_back({{"n", row.n},
                    {"left_product", row.left_product},
                    {"right_product", row.right_product},
                    {"equal", row.equal}});
  }
  j["per_divisor"] = rows;
  j["left_order"] = report.left_order;
  j["right_order"] = report.right_order;
  j["left_exponent"] = report.left_exponent;
  j["right_exponent"] = report.right_exponent;
  auto solvable = [](const std::vector<FactorSolvability>& factors, bool all) {
    ordered_json per = ordered_json::array();
    for (const auto& f : factors) per.push_back({{"label", f.label}, {"solvable", f.solvable}});
    return ordered_json{{"factors", per}, {"all", all}};
  };
  j["left_solvable"] = solvable(report.left_factors, report.left_solvable);
  j["right_solvable"] = solvable(report.right_factors, report.right_solvable);
  j["order_types_equal"] = report.order_types_equal;
  j["catalog_issues"] = report.catalog_issues;
  j["conclusion"] = report.conclusion;
  j["claims_hold"] = report.claims_hold();
  const auto failure = report.first_failure();
  j["first_failure"] = failure.empty() ? ordered_json(nullptr) : ordered_json(failure);
  return j;
}

std::string render_text(const VerificationReport& report) {
  std::ostringstream out;
  auto names = [](const std::vector<FactorSolvability>& fs) {
    std::string s;
    for (const auto& f : fs) s += (s.empty() ? "" : " x ") + f.label;
    return s;
  };
  out << "G = " << names(report.left_factors) << "\n";
  out << "H = " << names(report.right_factors) << "\n\n";
  out << std::setw(6) << "n" << std::setw(14) << "e_G(n)" << std::setw(14) << "e_H(n)" << "  equal\n";
  for (const auto& row : report.per_divisor) {
    out << std::setw(6) << row.n << std::setw(14) << row.left_product << std::setw(14) << row.right_product
        << "  " << yes_no(row.equal) << '\n';
  }
  std::size_t equal_rows = 0;
  for (const auto& row : report.per_divisor) equal_rows += row.equal;
  out << '\n' << equal_rows << "/" << report.per_divisor.size() << " divisors equal\n";
  out << "order:    G " << report.left_order << ", H " << report.right_order << '\n';
  out << "exponent: G " << report.left_exponent << ", H " << report.right_exponent << '\n';
  auto solv = [](const std::vector<FactorSolvability>& fs, bool all) {
    std::string s = yes_no(all) + " (";
    for (std::size_t k = 0; k < fs.size(); ++k) s += (k ? ", " : "") + fs[k].label + " " + yes_no(fs[k].solvable);
    return s + ")";
  };
  out << "solvable: G " << solv(report.left_factors, report.left_solvable) << '\n';
  out << "          H " << solv(report.right_factors, report.right_solvable) << '\n';
  out << "order types equal: " << yes_no(report.order_types_equal) << '\n';
  for (const auto& issue : report.catalog_issues) out << "catalog: " << issue << '\n';
  out << "conclusion: " << yes_no(report.conclusion) << '\n';
  if (report.claims_hold()) {
    out << "o_G = o_H, G is solvable, H is not solvable\n";
  } else {
    out << "FAILED: " << report.first_failure() << '\n';
  }
  return out.str();
}

int cmd_verify(const std::filesystem::path& data_dir, bool json, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const auto catalog = build_catalog(data_dir, CatalogCheck::Record);
    const auto report = build_verification_report(catalog);
    if (json) {
      print_json(out, to_json(report));
    } else {
      out << render_text(report);
    }
    for (const auto& issue : report.catalog_issues) err << "error: " << issue << '\n';
    if (!report.claims_hold()) {
      err << "verify failed: " << report.first_failure() << '\n';
      return static_cast<int>(kExitCheckFailed);
    }
    if (!report.catalog_issues.empty()) return static_cast<int>(kExitDataError);
    return static_cast<int>(kExitOk);
  });
}

// ----------------------------------------------------------------- spectrum

int cmd_spectrum(const std::string& target, const std::filesystem::path& data_dir, bool json,
                 std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const auto group = resolve_target(target, data_dir, &err);
    const auto o = order_type(*group);
    const auto e = exponent_type(*group);
    const bool solvable = is_solvable(group);
    const auto fp = to_hex(fingerprint(e));
    if (json) {
      ordered_json j;
      j["target"] = target;
      j["order"] = group->order();
      j["exponent"] = group->exponent();
      if (const auto& id = group->provenance()) {
        j["smallgroup"] = {id->order, id->index};
      } else {
        j["smallgroup"] = nullptr;
      }
      j["order_type"] = counts_object(o);
      j["exponent_type"] = counts_object(e);
      j["solvable"] = solvable;
      j["fingerprint"] = fp;
      print_json(out, j);
    } else {
      out << "target:   " << target << '\n';
      if (const auto& id = group->provenance()) out << "smallgroup: (" << id->order << ", " << id->index << ")\n";
      out << "order:    " << group->order() << '\n';
      out << "exponent: " << group->exponent() << '\n';
      out << "solvable: " << yes_no(solvable) << "\n\n";
      out << std::setw(6) << "n" << std::setw(12) << "o(n)" << std::setw(12) << "e(n)" << '\n';
      for (std::size_t k = 0; k < o.divisors().size(); ++k) {
        out << std::setw(6) << o.divisors()[k] << std::setw(12) << o.counts()[k] << std::setw(12) << e.counts()[k]
            << '\n';
      }
      out << "\nfingerprint: " << fp << '\n';
    }
    return static_cast<int>(kExitOk);
  });
}

// ------------------------------------------------------------------ compare

int cmd_compare(const std::vector<std::string>& left, const std::vector<std::string>& right,
                const std::filesystem::path& data_dir, bool json, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    if (left.empty() || right.empty()) throw std::invalid_argument("compare needs targets on both sides");
    auto load = [&](const std::vector<std::string>& targets, bool& all_solvable) {
      std::vector<Spectrum> spectra;
      std::vector<std::shared_ptr<const FiniteGroup>> groups;
      for (const auto& t : targets) {
        groups.push_back(resolve_target(t, data_dir, &err));
        spectra.push_back(exponent_type(*groups.back()));
      }
      const auto s = solvability(groups);
      all_solvable = std::all_of(s.begin(), s.end(), [](bool b) { return b; });
      return spectrum_product(spectra);
    };
    bool left_solvable = false;
    bool right_solvable = false;
    const auto l = load(left, left_solvable);
    const auto r = load(right, right_solvable);

    const auto joint = divisors(std::lcm(l.modulus(), r.modulus())).divisors;
    std::optional<std::uint64_t> first_unequal;
    ordered_json rows = ordered_json::array();
    std::ostringstream table;
    table << std::setw(6) << "n" << std::setw(14) << "left" << std::setw(14) << "right" << "  equal\n";
    for (auto n : joint) {
      const auto a = e_at(l, n);
      const auto b = e_at(r, n);
      if (a != b && !first_unequal) first_unequal = n;
      rows.push_back({{"n", n}, {"left_product", a}, {"right_product", b}, {"equal", a == b}});
      table << std::setw(6) << n << std::setw(14) << a << std::setw(14) << b << "  " << yes_no(a == b) << '\n';
    }
    const bool equal = !first_unequal.has_value();
    if (json) {
      ordered_json j;
      j["left"] = left;
      j["right"] = right;
      j["modulus"] = std::lcm(l.modulus(), r.modulus());
      j["per_divisor"] = rows;
      j["equal"] = equal;
      j["first_unequal_divisor"] = first_unequal ? ordered_json(*first_unequal) : ordered_json(nullptr);
      j["left_solvable"] = left_solvable;
      j["right_solvable"] = right_solvable;
      print_json(out, j);
    } else {
      out << table.str() << '\n';
      if (equal) {
        out << "equal: yes\n";
      } else {
        out << "equal: no (first difference at divisor " << *first_unequal << ")\n";
      }
      out << "left solvable:  " << yes_no(left_solvable) << '\n';
      out << "right solvable: " << yes_no(right_solvable) << '\n';
    }
    return static_cast<int>(equal ? kExitOk : kExitCheckFailed);
  });
}

// ------------------------------------------------------------------- collide

int cmd_collide(const std::vector<std::string>& targets, const std::filesystem::path& data_dir, bool json,
                std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    if (targets.size() < 2) throw std::invalid_argument("collide needs at least two targets");
    struct Row {
      std::string target;
      std::uint64_t order;
      bool solvable;
      std::string fingerprint;
    };
    std::vector<Row> rows;
    for (const auto& t : targets) {
      const auto g = resolve_target(t, data_dir, &err);
      rows.push_back({t, g->order(), is_solvable(g), to_hex(fingerprint(exponent_type(*g)))});
    }
    // Classes in order of first appearance.
    std::vector<std::vector<std::size_t>> classes;
    std::map<std::string, std::size_t> class_of;
    for (std::size_t k = 0; k < rows.size(); ++k) {
      auto [it, inserted] = class_of.emplace(rows[k].fingerprint, classes.size());
      if (inserted) classes.emplace_back();
      classes[it->second].push_back(k);
    }
    ordered_json jclasses = ordered_json::array();
    std::ostringstream text;
    std::size_t collisions = 0;
    for (const auto& cls : classes) {
      if (cls.size() < 2) continue;
      ++collisions;
      bool any_solvable = false;
      bool any_unsolvable = false;
      ordered_json members = ordered_json::array();
      text << "class " << collisions << ":";
      for (auto k : cls) {
        members.push_back({{"target", rows[k].target}, {"order", rows[k].order}, {"solvable", rows[k].solvable}});
        text << ' ' << rows[k].target << (rows[k].solvable ? "" : "*");
        (rows[k].solvable ? any_solvable : any_unsolvable) = true;
      }
      const bool mixed = any_solvable && any_unsolvable;
      text << (mixed ? "  [mixed solvability]" : "") << '\n';
      jclasses.push_back({{"fingerprint", rows[cls.front()].fingerprint},
                          {"members", members},
                          {"mixed_solvability", mixed}});
    }
    if (json) {
      ordered_json jt = ordered_json::array();
      for (const auto& r : rows) {
        jt.push_back({{"target", r.target}, {"order", r.order}, {"solvable", r.solvable}, {"fingerprint", r.fingerprint}});
      }
      print_json(out, ordered_json{{"targets", jt}, {"collisions", jclasses}});
    } else {
      out << text.str();
      out << collisions << " collision class" << (collisions == 1 ? "" : "es") << " among " << rows.size()
          << " targets (* = not solvable)\n";
    }
    return static_cast<int>(kExitOk);
  });
}

}  // namespace grouptype
