#include "klbraid/identities.hpp"

#include <functional>
#include <initializer_list>
#include <stdexcept>
#include <utility>

namespace klbraid {
namespace {

struct GuardViolation : std::domain_error {
  using std::domain_error::domain_error;
};

// structural * variable * prod base^exp. The structural factor depends only
// on the summation index; when it vanishes the term is identically zero and
// its powers are never evaluated. Otherwise a zero base under a negative
// exponent is a guard violation, even if the variable factor is also zero.
Rational term(const Integer& structural, long variable,
              std::initializer_list<std::pair<long, long>> powers) {
  if (structural == 0) return Rational(0);
  Integer num = structural * variable;
  Integer den = 1;
  Integer scratch;
  for (const auto& [base, exp] : powers) {
    if (exp < 0 && base == 0) {
      throw GuardViolation("zero base under exponent " + std::to_string(exp));
    }
    const unsigned long magnitude = static_cast<unsigned long>(base < 0 ? -base : base);
    const unsigned long power = static_cast<unsigned long>(exp < 0 ? -exp : exp);
    mpz_ui_pow_ui(scratch.get_mpz_t(), magnitude, power);
    if (base < 0 && power % 2 == 1) scratch = -scratch;
    if (exp >= 0) {
      num *= scratch;
    } else {
      den *= scratch;
    }
  }
  Rational r(num, den);
  r.canonicalize();
  return r;
}

struct Values {
  long m = 0;
  long x = 0;
  long y = 0;
  long a = 0;
};

using Side = std::function<Rational(const Values&)>;

struct Definition {
  IdentityInfo info;
  Side lhs;
  Side rhs;
};

Rational sum_over(long lo, long hi, const std::function<Rational(long)>& body) {
  Rational total = 0;
  for (long j = lo; j <= hi; ++j) total += body(j);
  return total;
}

std::vector<Definition> build_definitions() {
  std::vector<Definition> defs;
  auto add = [&](std::string id, std::string index, long min_index, bool free, std::string statement,
                 Side lhs, Side rhs) {
    defs.push_back({IdentityInfo{std::move(id), std::move(index), min_index, free, std::move(statement)},
                    std::move(lhs), std::move(rhs)});
  };

  // Free parameters x, y, a.
  add("abel-binomial", "m", 0, true,
      "sum_j C(m,j) A_j(x;a) A_{m-j}(y;a) = A_m(x+y;a)",
      [](const Values& v) {
        return sum_over(0, v.m, [&](long j) -> Rational {
          Rational left = j == 0 ? Rational(1) : term(1, v.x, {{v.x - v.a * j, j - 1}});
          long k = v.m - j;
          Rational right = k == 0 ? Rational(1) : term(1, v.y, {{v.y - v.a * k, k - 1}});
          return Rational(binomial(v.m, j)) * left * right;
        });
      },
      [](const Values& v) {
        if (v.m == 0) return Rational(1);
        return term(1, v.x + v.y, {{v.x + v.y - v.a * v.m, v.m - 1}});
      });
  add("abel-dx", "m", 0, true,
      "sum_j C(m,j) j (x-a) y (x-aj)^{j-2} (y-am+aj)^{m-j-1} = m (x+y-a)(x+y-am)^{m-2}",
      [](const Values& v) {
        return sum_over(0, v.m, [&](long j) -> Rational {
          return term(binomial(v.m, j) * j, (v.x - v.a) * v.y,
                      {{v.x - v.a * j, j - 2}, {v.y - v.a * v.m + v.a * j, v.m - j - 1}});
        });
      },
      [](const Values& v) {
        return term(v.m, v.x + v.y - v.a, {{v.x + v.y - v.a * v.m, v.m - 2}});
      });
  add("abel-dy", "m", 0, true,
      "sum_j C(m,j) (m-j) x (y-a) (x-aj)^{j-1} (y-am+aj)^{m-j-2} = m (x+y-a)(x+y-am)^{m-2}",
      [](const Values& v) {
        return sum_over(0, v.m, [&](long j) -> Rational {
          return term(binomial(v.m, j) * (v.m - j), v.x * (v.y - v.a),
                      {{v.x - v.a * j, j - 1}, {v.y - v.a * v.m + v.a * j, v.m - j - 2}});
        });
      },
      [](const Values& v) {
        return term(v.m, v.x + v.y - v.a, {{v.x + v.y - v.a * v.m, v.m - 2}});
      });
  add("dxy", "m", 0, true,
      "sum_j C(m,j) j (m-j) (x-a)(y-a) (x-aj)^{j-2} (y-am+aj)^{m-j-2} = m(m-1)(x+y-2a)(x+y-am)^{m-3}",
      [](const Values& v) {
        return sum_over(0, v.m, [&](long j) -> Rational {
          return term(binomial(v.m, j) * j * (v.m - j), (v.x - v.a) * (v.y - v.a),
                      {{v.x - v.a * j, j - 2}, {v.y - v.a * v.m + v.a * j, v.m - j - 2}});
        });
      },
      [](const Values& v) {
        return term(v.m * (v.m - 1), v.x + v.y - 2 * v.a, {{v.x + v.y - v.a * v.m, v.m - 3}});
      });
  add("dxxy", "m", 0, true,
      "sum_j C(m,j) j(j-1)(m-j) (x-2a)(y-a) (x-aj)^{j-3} (y-am+aj)^{m-j-2} = "
      "m(m-1)(m-2)(x+y-3a)(x+y-am)^{m-4}",
      [](const Values& v) {
        return sum_over(0, v.m, [&](long j) -> Rational {
          return term(binomial(v.m, j) * j * (j - 1) * (v.m - j), (v.x - 2 * v.a) * (v.y - v.a),
                      {{v.x - v.a * j, j - 3}, {v.y - v.a * v.m + v.a * j, v.m - j - 2}});
        });
      },
      [](const Values& v) {
        return term(v.m * (v.m - 1) * (v.m - 2), v.x + v.y - 3 * v.a,
                    {{v.x + v.y - v.a * v.m, v.m - 4}});
      });

  // Indexed by n: the desert side.
  add("des1-target", "n", 2, false,
      "sum_{r=0}^{n-2} 3 C(n-2,r) (2r+1)^{r-2} (2n-2r-3)^{n-r-4} = 2^{n-2} (n+1) (n-1)^{n-5}",
      [](const Values& v) {
        const long n = v.m;
        return sum_over(0, n - 2, [&](long r) -> Rational {
          return term(3 * binomial(n - 2, r), 1, {{2 * r + 1, r - 2}, {2 * n - 2 * r - 3, n - r - 4}});
        });
      },
      [](const Values& v) {
        const long n = v.m;
        return term(n + 1, 1, {{2, n - 2}, {n - 1, n - 5}});
      });
  add("abel-spec-1", "n", 2, false,
      "sum_{r=0}^{n-2} C(n-2,r) (2r+1)^{r-1} (2n-2r-3)^{n-r-3} = 2^{n-2} (n-1)^{n-3}",
      [](const Values& v) {
        const long n = v.m;
        return sum_over(0, n - 2, [&](long r) -> Rational {
          return term(binomial(n - 2, r), 1, {{2 * r + 1, r - 1}, {2 * n - 2 * r - 3, n - r - 3}});
        });
      },
      [](const Values& v) {
        const long n = v.m;
        return term(1, 1, {{2, n - 2}, {n - 1, n - 3}});
      });
  add("abel-spec-2", "n", 2, false,
      "sum_{r=0}^{n-2} C(n-2,r) 3r (2r+1)^{r-2} (2n-2r-3)^{n-r-3} = 2^{n-2} (n-2) (n-1)^{n-4}",
      [](const Values& v) {
        const long n = v.m;
        return sum_over(0, n - 2, [&](long r) -> Rational {
          return term(binomial(n - 2, r) * 3 * r, 1, {{2 * r + 1, r - 2}, {2 * n - 2 * r - 3, n - r - 3}});
        });
      },
      [](const Values& v) {
        const long n = v.m;
        return term(n - 2, 1, {{2, n - 2}, {n - 1, n - 4}});
      });
  add("abel-spec-2-reindexed", "n", 2, false,
      "sum_{r=0}^{n-2} C(n-2,r) 3(n-r-2) (2r+1)^{r-1} (2n-2r-3)^{n-r-4} = 2^{n-2} (n-2) (n-1)^{n-4}",
      [](const Values& v) {
        const long n = v.m;
        return sum_over(0, n - 2, [&](long r) -> Rational {
          return term(binomial(n - 2, r) * 3 * (n - r - 2), 1,
                      {{2 * r + 1, r - 1}, {2 * n - 2 * r - 3, n - r - 4}});
        });
      },
      [](const Values& v) {
        const long n = v.m;
        return term(n - 2, 1, {{2, n - 2}, {n - 1, n - 4}});
      });
  add("q-target", "n", 2, false,
      "sum_{j=0}^{n-1} 3 C(n-1,j) (2j-1)^{j-3} (2n-2j-1)^{n-j-3} = -8 (n-3) (2n-2)^{n-4}",
      [](const Values& v) {
        const long n = v.m;
        return sum_over(0, n - 1, [&](long j) -> Rational {
          return term(3 * binomial(n - 1, j), 1, {{2 * j - 1, j - 3}, {2 * n - 2 * j - 1, n - j - 3}});
        });
      },
      [](const Values& v) {
        const long n = v.m;
        return term(-8 * (n - 3), 1, {{2 * n - 2, n - 4}});
      });

  // Indexed by m: the inverse-KL side, all at x = -1, y = 1, a = -2 in spirit.
  add("comb-A", "m", 1, false,
      "sum_j 3 C(m,j) (2j-1)^{j-2} (2m-2j+1)^{m-j-2} = 8 (2m)^{m-2}",
      [](const Values& v) {
        return sum_over(0, v.m, [&](long j) -> Rational {
          return term(3 * binomial(v.m, j), 1, {{2 * j - 1, j - 2}, {2 * v.m - 2 * j + 1, v.m - j - 2}});
        });
      },
      [](const Values& v) { return term(8, 1, {{2 * v.m, v.m - 2}}); });
  add("comb-B", "m", 1, false,
      "sum_j 3 C(m,j) (4mj-4j+1) (2j-1)^{j-3} (2m-2j+1)^{m-j-2} = 8 (2m^2+m-2) (2m)^{m-3}",
      [](const Values& v) {
        return sum_over(0, v.m, [&](long j) -> Rational {
          return term(3 * binomial(v.m, j) * (4 * v.m * j - 4 * j + 1), 1,
                      {{2 * j - 1, j - 3}, {2 * v.m - 2 * j + 1, v.m - j - 2}});
        });
      },
      [](const Values& v) {
        return term(8 * (2 * v.m * v.m + v.m - 2), 1, {{2 * v.m, v.m - 3}});
      });
  add("spec-zero", "m", 1, false,
      "sum_j C(m,j) (2j-1)^{j-1} (2m-2j+1)^{m-j-1} = 0",
      [](const Values& v) {
        return sum_over(0, v.m, [&](long j) -> Rational {
          return term(binomial(v.m, j), 1, {{2 * j - 1, j - 1}, {2 * v.m - 2 * j + 1, v.m - j - 1}});
        });
      },
      [](const Values&) { return Rational(0); });
  add("spec-x", "m", 1, false,
      "sum_j C(m,j) j (2j-1)^{j-2} (2m-2j+1)^{m-j-1} = (2m)^{m-1}",
      [](const Values& v) {
        return sum_over(0, v.m, [&](long j) -> Rational {
          return term(binomial(v.m, j) * j, 1, {{2 * j - 1, j - 2}, {2 * v.m - 2 * j + 1, v.m - j - 1}});
        });
      },
      [](const Values& v) { return term(1, 1, {{2 * v.m, v.m - 1}}); });
  add("spec-y", "m", 1, false,
      "sum_j -3 C(m,j) (m-j) (2j-1)^{j-1} (2m-2j+1)^{m-j-2} = (2m)^{m-1}",
      [](const Values& v) {
        return sum_over(0, v.m, [&](long j) -> Rational {
          return term(-3 * binomial(v.m, j) * (v.m - j), 1,
                      {{2 * j - 1, j - 1}, {2 * v.m - 2 * j + 1, v.m - j - 2}});
        });
      },
      [](const Values& v) { return term(1, 1, {{2 * v.m, v.m - 1}}); });
  add("lin-1", "m", 1, false,
      "sum_j C(m,j) (2j-1)^{j-2} (2m-2j+1)^{m-j-1} = 2 (2m)^{m-1}",
      [](const Values& v) {
        return sum_over(0, v.m, [&](long j) -> Rational {
          return term(binomial(v.m, j), 1, {{2 * j - 1, j - 2}, {2 * v.m - 2 * j + 1, v.m - j - 1}});
        });
      },
      [](const Values& v) { return term(2, 1, {{2 * v.m, v.m - 1}}); });
  add("lin-2", "m", 1, false,
      "sum_j 3 C(m,j) (2j-1)^{j-1} (2m-2j+1)^{m-j-2} = 2 (2m)^{m-1}",
      [](const Values& v) {
        return sum_over(0, v.m, [&](long j) -> Rational {
          return term(3 * binomial(v.m, j), 1, {{2 * j - 1, j - 1}, {2 * v.m - 2 * j + 1, v.m - j - 2}});
        });
      },
      [](const Values& v) { return term(2, 1, {{2 * v.m, v.m - 1}}); });
  add("dxy-spec", "m", 1, false,
      "sum_j 3 C(m,j) j (m-j) (2j-1)^{j-2} (2m-2j+1)^{m-j-2} = 2 (m-1) (2m)^{m-2}",
      [](const Values& v) {
        return sum_over(0, v.m, [&](long j) -> Rational {
          return term(3 * binomial(v.m, j) * j * (v.m - j), 1,
                      {{2 * j - 1, j - 2}, {2 * v.m - 2 * j + 1, v.m - j - 2}});
        });
      },
      [](const Values& v) { return term(2 * (v.m - 1), 1, {{2 * v.m, v.m - 2}}); });
  add("dxxy-spec", "m", 1, false,
      "sum_j 3 C(m,j) j (j-1) (m-j) (2j-1)^{j-3} (2m-2j+1)^{m-j-2} = (m-1)(m-2) (2m)^{m-3}",
      [](const Values& v) {
        return sum_over(0, v.m, [&](long j) -> Rational {
          return term(3 * binomial(v.m, j) * j * (j - 1) * (v.m - j), 1,
                      {{2 * j - 1, j - 3}, {2 * v.m - 2 * j + 1, v.m - j - 2}});
        });
      },
      [](const Values& v) { return term((v.m - 1) * (v.m - 2), 1, {{2 * v.m, v.m - 3}}); });
  add("comb-C", "m", 1, false,
      "sum_j 3 C(m,j) j (m-j) (2j-1)^{j-3} (2m-2j+1)^{m-j-2} = 2 (m-1)(m+2) (2m)^{m-3}",
      [](const Values& v) {
        return sum_over(0, v.m, [&](long j) -> Rational {
          return term(3 * binomial(v.m, j) * j * (v.m - j), 1,
                      {{2 * j - 1, j - 3}, {2 * v.m - 2 * j + 1, v.m - j - 2}});
        });
      },
      [](const Values& v) { return term(2 * (v.m - 1) * (v.m + 2), 1, {{2 * v.m, v.m - 3}}); });
  return defs;
}

const std::vector<Definition>& definitions() {
  static const std::vector<Definition> defs = build_definitions();
  return defs;
}

const Definition& definition(std::string_view id) {
  for (const auto& def : definitions()) {
    if (def.info.id == id) return def;
  }
  throw std::invalid_argument("unknown identity id: " + std::string(id));
}

IdentityParams params_for(const IdentityInfo& info, const Values& v) {
  IdentityParams p;
  if (info.index_name == "n") {
    p.n = v.m;
  } else {
    p.m = v.m;
  }
  if (info.free_parameters) {
    p.x = v.x;
    p.y = v.y;
    p.a = v.a;
  }
  return p;
}

// Evaluates one side, mapping guard violations to nullopt.
std::optional<Rational> guarded(const Side& side, const Values& v) {
  try {
    return side(v);
  } catch (const GuardViolation&) {
    return std::nullopt;
  }
}

IdentityCase evaluate(const Definition& def, const Values& v) {
  IdentityCase c;
  c.id = def.info.id;
  c.params = params_for(def.info, v);
  try {
    c.lhs = def.lhs(v);
    c.rhs = def.rhs(v);
    c.status = c.lhs == c.rhs ? CaseStatus::kPass : CaseStatus::kFail;
  } catch (const GuardViolation& e) {
    c.status = CaseStatus::kSkip;
    c.note = e.what();
  }
  return c;
}

Rational lhs_of(std::string_view id, const Values& v) { return definition(id).lhs(v); }
Rational rhs_of(std::string_view id, const Values& v) { return definition(id).rhs(v); }

struct Combination {
  std::string id;
  std::string index_name;
  long min_index;
  // Returns {combined sides of the sources, scaled sides of the target}; the
  // chain holds when both the left sides and the right sides agree.
  std::function<std::pair<Rational, Rational>(long, const std::function<Rational(std::string_view, const Values&)>&)>
      evaluate;
};

Values at(long index) { return Values{index, 0, 0, 0}; }
Values at(long m, long x, long y, long a) { return Values{m, x, y, a}; }

std::vector<Combination> build_combinations() {
  using Eval = std::function<Rational(std::string_view, const Values&)>;
  std::vector<Combination> combos;
  auto add = [&](std::string id, std::string index, long min_index,
                 std::function<std::pair<Rational, Rational>(long, const Eval&)> fn) {
    combos.push_back({std::move(id), std::move(index), min_index, std::move(fn)});
  };
  // Specializations of the general identities at x = -1, y = 1, a = -2.
  add("chain:spec-zero", "m", 1, [](long m, const Eval& f) {
    return std::pair<Rational, Rational>{-f("abel-binomial", at(m, -1, 1, -2)), f("spec-zero", at(m))};
  });
  add("chain:spec-x", "m", 1, [](long m, const Eval& f) {
    return std::pair<Rational, Rational>{f("abel-dx", at(m, -1, 1, -2)), f("spec-x", at(m))};
  });
  add("chain:spec-y", "m", 1, [](long m, const Eval& f) {
    return std::pair<Rational, Rational>{f("abel-dy", at(m, -1, 1, -2)), f("spec-y", at(m))};
  });
  add("chain:dxy-spec", "m", 1, [](long m, const Eval& f) {
    return std::pair<Rational, Rational>{f("dxy", at(m, -1, 1, -2)), f("dxy-spec", at(m))};
  });
  add("chain:dxxy-spec", "m", 1, [](long m, const Eval& f) {
    return std::pair<Rational, Rational>{f("dxxy", at(m, -1, 1, -2)), 3 * f("dxxy-spec", at(m))};
  });
  add("chain:lin-1", "m", 1, [](long m, const Eval& f) {
    return std::pair<Rational, Rational>{2 * f("spec-x", at(m)) - f("spec-zero", at(m)), f("lin-1", at(m))};
  });
  add("chain:lin-2", "m", 1, [](long m, const Eval& f) {
    return std::pair<Rational, Rational>{3 * f("spec-zero", at(m)) + 2 * f("spec-y", at(m)), f("lin-2", at(m))};
  });
  add("chain:comb-A", "m", 1, [](long m, const Eval& f) {
    return std::pair<Rational, Rational>{3 * f("lin-1", at(m)) + f("lin-2", at(m)), Rational(2 * m) * f("comb-A", at(m))};
  });
  add("chain:comb-C", "m", 1, [](long m, const Eval& f) {
    return std::pair<Rational, Rational>{f("dxy-spec", at(m)) - 2 * f("dxxy-spec", at(m)), f("comb-C", at(m))};
  });
  add("chain:comb-B", "m", 1, [](long m, const Eval& f) {
    return std::pair<Rational, Rational>{f("lin-2", at(m)) + 4 * f("comb-C", at(m)), f("comb-B", at(m))};
  });
  add("chain:q-target", "m", 1, [](long m, const Eval& f) {
    return std::pair<Rational, Rational>{f("comb-B", at(m)) - Rational(2 * m - 2) * f("comb-A", at(m)),
                     Rational(2 * m - 1) * f("q-target", at(m + 1))};
  });
  // The desert side at x = y = 1, a = -2 with m = n - 2.
  add("chain:abel-spec-1", "n", 2, [](long n, const Eval& f) {
    return std::pair<Rational, Rational>{f("abel-binomial", at(n - 2, 1, 1, -2)), f("abel-spec-1", at(n))};
  });
  add("chain:abel-spec-2", "n", 2, [](long n, const Eval& f) {
    return std::pair<Rational, Rational>{f("abel-dx", at(n - 2, 1, 1, -2)), f("abel-spec-2", at(n))};
  });
  add("chain:des1-target", "n", 2, [](long n, const Eval& f) {
    return std::pair<Rational, Rational>{3 * f("abel-spec-1", at(n)) - f("abel-spec-2", at(n)) -
                         f("abel-spec-2-reindexed", at(n)),
                     Rational(n - 1) * f("des1-target", at(n))};
  });
  return combos;
}

const std::vector<Combination>& combinations() {
  static const std::vector<Combination> combos = build_combinations();
  return combos;
}

// Monomial coefficients of the interpolating polynomial through the points.
std::vector<Rational> interpolate(const std::vector<long>& xs, const std::vector<Rational>& ys) {
  const std::size_t count = xs.size();
  std::vector<Rational> diff(ys);
  for (std::size_t level = 1; level < count; ++level) {
    for (std::size_t i = count - 1; i >= level; --i) {
      diff[i] = (diff[i] - diff[i - 1]) / Rational(xs[i] - xs[i - level]);
    }
  }
  std::vector<Rational> coeffs(count, Rational(0));
  for (std::size_t k = count; k-- > 0;) {
    // coeffs = coeffs * (t - xs[k]) + diff[k]
    std::vector<Rational> next(count, Rational(0));
    for (std::size_t i = 0; i < count; ++i) {
      if (coeffs[i] == 0) continue;
      if (i + 1 < count) next[i + 1] += coeffs[i];
      next[i] -= coeffs[i] * xs[k];
    }
    next[0] += diff[k];
    coeffs = std::move(next);
  }
  return coeffs;
}

Rational derivative_at(const std::vector<Rational>& coeffs, long t) {
  Rational value = 0;
  for (std::size_t i = coeffs.size(); i-- > 1;) value = value * t + coeffs[i] * static_cast<long>(i);
  return value;
}

std::vector<long> sample_points(long count) {
  std::vector<long> points;
  for (long k = 0; static_cast<long>(points.size()) < count; ++k) {
    points.push_back(k % 2 == 0 ? k / 2 : -(k + 1) / 2);
  }
  return points;
}

}  // namespace

Rational abel(long m, const Rational& x, const Rational& a) {
  if (m < 0) throw std::domain_error("abel requires m >= 0");
  if (m == 0) return Rational(1);
  return x * int_power(x - a * m, m - 1);
}

std::string IdentityParams::to_string() const {
  std::string out;
  auto put = [&](const char* name, const std::optional<long>& value) {
    if (!value) return;
    if (!out.empty()) out += ',';
    out += name;
    out += '=';
    out += std::to_string(*value);
  };
  put("m", m);
  put("n", n);
  put("x", x);
  put("y", y);
  put("a", a);
  return out;
}

std::string to_string(CaseStatus status) {
  switch (status) {
    case CaseStatus::kPass:
      return "pass";
    case CaseStatus::kFail:
      return "fail";
    case CaseStatus::kSkip:
      return "skip";
  }
  return "?";
}

const std::vector<IdentityInfo>& identity_catalog() {
  static const std::vector<IdentityInfo> infos = [] {
    std::vector<IdentityInfo> out;
    for (const auto& def : definitions()) out.push_back(def.info);
    return out;
  }();
  return infos;
}

const IdentityInfo& identity_info(std::string_view id) { return definition(id).info; }

IdentityCase check_identity(std::string_view id, const IdentityParams& params) {
  const Definition& def = definition(id);
  Values v;
  const auto& index = def.info.index_name == "n" ? params.n : params.m;
  if (!index) {
    throw std::invalid_argument(std::string(id) + " needs parameter " + def.info.index_name);
  }
  v.m = *index;
  if (def.info.free_parameters) {
    if (!params.x || !params.y || !params.a) {
      throw std::invalid_argument(std::string(id) + " needs parameters x, y and a");
    }
    v.x = *params.x;
    v.y = *params.y;
    v.a = *params.a;
  }
  if (v.m < 0) throw std::invalid_argument(std::string(id) + " needs a nonnegative index");
  return evaluate(def, v);
}

std::vector<IdentityCase> check_chains(long index) {
  std::vector<IdentityCase> cases;
  for (const auto& combo : combinations()) {
    if (index < combo.min_index) continue;
    IdentityCase c;
    c.id = combo.id;
    if (combo.index_name == "n") {
      c.params.n = index;
    } else {
      c.params.m = index;
    }
    try {
      auto [lhs_from, lhs_to] = combo.evaluate(index, lhs_of);
      auto [rhs_from, rhs_to] = combo.evaluate(index, rhs_of);
      c.lhs = lhs_from;
      c.rhs = lhs_to;
      const bool sides_agree = rhs_from == rhs_to;
      c.status = lhs_from == lhs_to && sides_agree ? CaseStatus::kPass : CaseStatus::kFail;
      if (!sides_agree) {
        c.note = "right sides combine to " + klbraid::to_string(rhs_from) + ", expected " +
                 klbraid::to_string(rhs_to);
      }
    } catch (const GuardViolation& e) {
      c.status = CaseStatus::kSkip;
      c.note = e.what();
    }
    cases.push_back(std::move(c));
  }
  return cases;
}

std::vector<IdentityCase> check_derivatives(long m, long fixed_first, long a) {
  struct Link {
    const char* derivative;
    const char* parent;
    bool in_x;
  };
  static const Link links[] = {
      {"abel-dx", "abel-binomial", true},
      {"abel-dy", "abel-binomial", false},
      {"dxy", "abel-dy", true},
      {"dxxy", "dxy", true},
  };
  std::vector<IdentityCase> cases;
  const std::vector<long> candidates = sample_points(4 * m + 16);
  for (const Link& link : links) {
    IdentityCase c;
    c.id = std::string("deriv:") + link.derivative;
    c.params.m = m;
    (link.in_x ? c.params.y : c.params.x) = fixed_first;
    c.params.a = a;
    auto values_at = [&](long t) {
      return link.in_x ? Values{m, t, fixed_first, a} : Values{m, fixed_first, t, a};
    };
    const Definition& parent = definition(link.parent);
    const Definition& derivative = definition(link.derivative);

    std::vector<long> xs;
    std::vector<Rational> ys;
    std::size_t next = 0;
    for (; next < candidates.size() && static_cast<long>(xs.size()) < m + 1; ++next) {
      if (auto value = guarded(parent.lhs, values_at(candidates[next]))) {
        xs.push_back(candidates[next]);
        ys.push_back(*value);
      }
    }
    if (static_cast<long>(xs.size()) < m + 1) {
      c.note = "not enough guarded interpolation points";
      cases.push_back(std::move(c));
      continue;
    }
    const std::vector<Rational> coeffs = interpolate(xs, ys);
    long compared = 0;
    bool agree = true;
    for (; next < candidates.size() && compared < m + 2; ++next) {
      auto value = guarded(derivative.lhs, values_at(candidates[next]));
      if (!value) continue;
      Rational expected = derivative_at(coeffs, candidates[next]);
      if (compared == 0) {
        c.lhs = *value;
        c.rhs = expected;
      }
      if (*value != expected && agree) {
        agree = false;
        c.lhs = *value;
        c.rhs = expected;
        c.note = "differs at " + std::string(link.in_x ? "x=" : "y=") + std::to_string(candidates[next]);
      }
      ++compared;
    }
    if (compared < m + 2) {
      c.status = CaseStatus::kSkip;
      c.note = "not enough guarded comparison points";
    } else {
      c.status = agree ? CaseStatus::kPass : CaseStatus::kFail;
    }
    cases.push_back(std::move(c));
  }
  return cases;
}

std::vector<IdentityCase> run_catalog(const CatalogGrid& grid) {
  std::vector<IdentityCase> cases;
  for (const auto& def : definitions()) {
    if (def.info.free_parameters) {
      for (long m = def.info.min_index; m <= grid.free_max_m; ++m) {
        for (long x = -grid.free_bound; x <= grid.free_bound; ++x) {
          for (long y = -grid.free_bound; y <= grid.free_bound; ++y) {
            for (long a = -grid.free_bound; a <= grid.free_bound; ++a) {
              cases.push_back(evaluate(def, Values{m, x, y, a}));
            }
          }
        }
      }
    } else {
      for (long index = def.info.min_index; index <= grid.max_index; ++index) {
        cases.push_back(evaluate(def, at(index)));
      }
    }
  }
  for (long index = 1; index <= grid.max_index; ++index) {
    for (auto& c : check_chains(index)) cases.push_back(std::move(c));
  }
  for (long m = 1; m <= grid.derivative_max_m; ++m) {
    for (long fixed = -grid.derivative_bound; fixed <= grid.derivative_bound; ++fixed) {
      for (long a = -grid.derivative_bound; a <= grid.derivative_bound; ++a) {
        for (auto& c : check_derivatives(m, fixed, a)) cases.push_back(std::move(c));
      }
    }
  }
  return cases;
}

CatalogSummary summarize(const std::vector<IdentityCase>& cases) {
  CatalogSummary summary;
  for (const auto& c : cases) {
    switch (c.status) {
      case CaseStatus::kPass:
        ++summary.passed;
        break;
      case CaseStatus::kFail:
        ++summary.failed;
        break;
      case CaseStatus::kSkip:
        ++summary.skipped;
        break;
    }
  }
  return summary;
}

}  // namespace klbraid
