#include "suzuki/structured.hpp"

#include <algorithm>
#include <exception>
#include <mutex>
#include <string>
#include <thread>

#include "suzuki/checked.hpp"

namespace suzuki {

int64_t pole_order(const SuzukiParams& p, const StructuredMonomial& mon) {
    int64_t pole = checked_mul(mon.a, p.vy);
    pole = checked_add(pole, checked_mul(mon.b, p.vz));
    pole = checked_add(pole, checked_mul(mon.c, p.vh1));
    return checked_add(pole, checked_mul(mon.d, p.vh2));
}

bool is_normal_form(const SuzukiParams& p, const StructuredMonomial& mon) {
    return mon.a >= 0 && mon.b >= 0 && mon.c >= 0 && mon.d >= 0 && mon.b <= 1 &&
           mon.c <= p.q0 - 1 && mon.d <= p.q0 - 1;
}

namespace {

std::vector<StructuredMonomial> collapse(std::vector<StructuredMonomial> terms) {
    std::sort(terms.begin(), terms.end());
    std::vector<StructuredMonomial> out;
    out.reserve(terms.size());
    for (size_t i = 0; i < terms.size();) {
        size_t j = i;
        while (j < terms.size() && terms[j] == terms[i]) ++j;
        if ((j - i) % 2 != 0) out.push_back(terms[i]);
        i = j;
    }
    return out;
}

} // namespace

StructuredPoly StructuredPoly::monomial(const StructuredMonomial& mon) {
    StructuredPoly f;
    f.terms_ = {mon};
    return f;
}

StructuredPoly StructuredPoly::from_terms(std::vector<StructuredMonomial> terms) {
    StructuredPoly f;
    f.terms_ = collapse(std::move(terms));
    return f;
}

StructuredPoly operator+(const StructuredPoly& f, const StructuredPoly& g) {
    StructuredPoly out;
    out.terms_.reserve(f.terms_.size() + g.terms_.size());
    std::set_symmetric_difference(f.terms_.begin(), f.terms_.end(), g.terms_.begin(),
                                  g.terms_.end(), std::back_inserter(out.terms_));
    return out;
}

StructuredPoly normalize(const SuzukiParams& p, const StructuredPoly& f) {
    std::vector<StructuredMonomial> terms = f.terms();
    for (const auto& t : terms) {
        if (t.a < 0 || t.b < 0 || t.c < 0 || t.d < 0)
            throw std::invalid_argument("normalize: negative exponent");
    }
    const int64_t cap =
        64 * p.q0 * std::max<int64_t>(1, static_cast<int64_t>(terms.size()));
    int64_t steps = 0;

    auto toggle = [&terms](const StructuredMonomial& mon) {
        auto it = std::lower_bound(terms.begin(), terms.end(), mon);
        if (it != terms.end() && *it == mon) terms.erase(it);
        else terms.insert(it, mon);
    };

    for (;;) {
        // One violating monomial per pass: d first, then c, then b.
        const StructuredMonomial* victim = nullptr;
        int kind = 0;
        for (const auto& t : terms) {
            if (t.d >= p.q0) {
                victim = &t;
                kind = 'd';
                break;
            }
        }
        if (!victim) {
            for (const auto& t : terms) {
                if (t.c >= p.q0) {
                    victim = &t;
                    kind = 'c';
                    break;
                }
            }
        }
        if (!victim) {
            for (const auto& t : terms) {
                if (t.b >= 2) {
                    victim = &t;
                    kind = 'b';
                    break;
                }
            }
        }
        if (!victim) break;
        if (++steps > cap) {
            throw std::logic_error("normalize: iteration cap exceeded (rewriting failed to terminate)");
        }
        const StructuredMonomial t = *victim;
        toggle(t);
        switch (kind) {
            case 'd': // h2^{q0} = h1 + z*y^{q0}
                toggle({t.a, t.b, t.c + 1, t.d - p.q0});
                toggle({checked_add(t.a, p.q0), t.b + 1, t.c, t.d - p.q0});
                break;
            case 'c': // h1^{q0} = z + y^{q0+1}
                toggle({t.a, t.b + 1, t.c - p.q0, t.d});
                toggle({checked_add(t.a, p.q0 + 1), t.b, t.c - p.q0, t.d});
                break;
            default: // z^2 = y*h1 + h2
                toggle({checked_add(t.a, 1), t.b - 2, t.c + 1, t.d});
                toggle({t.a, t.b - 2, t.c, t.d + 1});
                break;
        }
    }
    return StructuredPoly::from_terms(std::move(terms));
}

std::vector<StructuredMonomial> normal_monomials_up_to(const SuzukiParams& p, int64_t bound) {
    std::vector<std::pair<int64_t, StructuredMonomial>> found;
    for (int64_t a = 0; checked_mul(a, p.vy) <= bound; ++a) {
        for (int64_t b = 0; b <= 1; ++b) {
            for (int64_t c = 0; c < p.q0; ++c) {
                for (int64_t d = 0; d < p.q0; ++d) {
                    const StructuredMonomial mon{a, b, c, d};
                    const int64_t pole = pole_order(p, mon);
                    if (pole <= bound) found.emplace_back(pole, mon);
                }
            }
        }
    }
    std::sort(found.begin(), found.end());
    std::vector<StructuredMonomial> out;
    out.reserve(found.size());
    for (auto& [pole, mon] : found) out.push_back(mon);
    return out;
}

std::optional<size_t> Basis::index_of(const StructuredMonomial& mon) const {
    auto it = index.find(mon);
    if (it == index.end()) return std::nullopt;
    return it->second;
}

Basis enumerate_basis(const SuzukiParams& p) {
    Basis basis;
    basis.params = p;
    basis.elements = normal_monomials_up_to(p, 2 * p.g - 2);
    basis.poles.reserve(basis.elements.size());
    for (size_t i = 0; i < basis.elements.size(); ++i) {
        basis.poles.push_back(pole_order(p, basis.elements[i]));
        basis.index.emplace(basis.elements[i], i);
    }
    if (static_cast<int64_t>(basis.size()) != p.g) {
        throw std::logic_error("enumerate_basis: expected " + std::to_string(p.g) +
                               " monomials, found " + std::to_string(basis.size()));
    }
    for (size_t i = 1; i < basis.poles.size(); ++i) {
        if (basis.poles[i] <= basis.poles[i - 1])
            throw std::logic_error("enumerate_basis: pole orders are not pairwise distinct");
    }
    return basis;
}

CoordSolver::CoordSolver(const SuzukiParams& p, std::vector<StructuredMonomial> monomials)
    : p_(p), monomials_(std::move(monomials)) {
    Embedder emb(p_);
    std::vector<PlanePoly> images;
    images.reserve(monomials_.size());
    for (const auto& mon : monomials_) {
        images.push_back(emb.embed(mon.a, mon.b, mon.c, mon.d));
        for (const auto& t : images.back().terms()) row_of_term_.emplace(t, 0);
    }
    size_t next_row = 0;
    for (auto& [term, row] : row_of_term_) row = next_row++;

    const size_t n_rows = row_of_term_.size();
    const size_t n_cols = monomials_.size();
    embedded_ = BitMatrix(n_rows, n_cols);
    for (size_t j = 0; j < n_cols; ++j) {
        for (const auto& t : images[j].terms()) embedded_.set(row_of_term_.at(t), j);
    }

    // Row-echelon pass to pick one pivot row per column.
    BitMatrix work = embedded_;
    std::vector<size_t> row_origin(n_rows);
    for (size_t i = 0; i < n_rows; ++i) row_origin[i] = i;
    pivot_rows_.resize(n_cols);
    for (size_t c = 0; c < n_cols; ++c) {
        size_t pivot = n_rows;
        for (size_t i = c; i < n_rows; ++i) {
            if (work.get(i, c)) {
                pivot = i;
                break;
            }
        }
        if (pivot == n_rows) {
            throw std::logic_error("CoordSolver: embedded images are linearly dependent");
        }
        work.swap_rows(c, pivot);
        std::swap(row_origin[c], row_origin[pivot]);
        for (size_t i = c + 1; i < n_rows; ++i)
            if (work.get(i, c)) work.xor_rows(i, c);
        pivot_rows_[c] = row_origin[c];
    }

    // Invert the square block formed by the pivot rows.
    BitMatrix square(n_cols, n_cols);
    for (size_t i = 0; i < n_cols; ++i) {
        for (size_t j = 0; j < n_cols; ++j) square.set(i, j, embedded_.get(pivot_rows_[i], j));
    }
    BitMatrix inv = BitMatrix::identity(n_cols);
    for (size_t c = 0; c < n_cols; ++c) {
        size_t pivot = n_cols;
        for (size_t i = c; i < n_cols; ++i) {
            if (square.get(i, c)) {
                pivot = i;
                break;
            }
        }
        if (pivot == n_cols) throw std::logic_error("CoordSolver: pivot block is singular");
        square.swap_rows(c, pivot);
        inv.swap_rows(c, pivot);
        for (size_t i = 0; i < n_cols; ++i) {
            if (i != c && square.get(i, c)) {
                square.xor_rows(i, c);
                inv.xor_rows(i, c);
            }
        }
    }
    solve_ = std::move(inv);
}

BitVector CoordSolver::coords(const PlanePoly& f) const {
    if (!f.known_canonical() && !f.max_z_exp_below(p_.q))
        throw std::invalid_argument("CoordSolver::coords: input is not curve-reduced");
    BitVector rhs(embedded_.rows());
    for (const auto& t : f.terms()) {
        auto it = row_of_term_.find(t);
        if (it == row_of_term_.end())
            throw not_regular_error("not a regular form: plane term outside the embedded span");
        rhs.set(it->second);
    }
    BitVector rhs_pivot(monomials_.size());
    for (size_t i = 0; i < pivot_rows_.size(); ++i) rhs_pivot.set(i, rhs.get(pivot_rows_[i]));
    const BitVector x = solve_.multiply(rhs_pivot);
    if (embedded_.multiply(x) != rhs)
        throw not_regular_error("not a regular form: inconsistent coordinate system");
    return x;
}

StructuredPoly CoordSolver::lift(const PlanePoly& f) const {
    const BitVector x = coords(f);
    std::vector<StructuredMonomial> terms;
    for (size_t j = 0; j < monomials_.size(); ++j)
        if (x.get(j)) terms.push_back(monomials_[j]);
    return StructuredPoly::from_terms(std::move(terms));
}

CartierTable::CartierTable(const SuzukiParams& p) : p_(p) {
    // Residue images can exceed pole order 2g-2 when a residue itself is not
    // regular (small m); widen the lift span accordingly: a pole of order N
    // maps to one of order at most 2g-2 - floor((2g-2 - N)/2).
    const int64_t reg_bound = 2 * p.g - 2;
    const int64_t residue_max = p.vy + p.vz + p.vh1 + p.vh2;
    int64_t bound = reg_bound;
    if (residue_max > reg_bound) bound = checked_add(reg_bound, (residue_max - reg_bound + 1) / 2);

    CoordSolver solver(p, normal_monomials_up_to(p, bound));
    Embedder emb(p);
    for (int r4 = 0; r4 <= 1; ++r4) {
        for (int r3 = 0; r3 <= 1; ++r3) {
            for (int r2 = 0; r2 <= 1; ++r2) {
                for (int r1 = 0; r1 <= 1; ++r1) {
                    const PlanePoly image = cartier_oracle(p, emb.embed(r1, r2, r3, r4));
                    images_[r1 + 2 * r2 + 4 * r3 + 8 * r4] = solver.lift(image);
                }
            }
        }
    }
}

const StructuredPoly& CartierTable::residue_image(int r1, int r2, int r3, int r4) const {
    if ((r1 | r2 | r3 | r4) >> 1)
        throw std::invalid_argument("residue_image: exponents must be 0 or 1");
    return images_[r1 + 2 * r2 + 4 * r3 + 8 * r4];
}

StructuredPoly CartierTable::apply(const StructuredMonomial& mon) const {
    if (!is_normal_form(p_, mon))
        throw std::invalid_argument("CartierTable::apply: monomial is not in normal form");
    const StructuredMonomial even{mon.a / 2, mon.b / 2, mon.c / 2, mon.d / 2};
    const StructuredPoly& residue = images_[static_cast<size_t>(
        (mon.a & 1) + 2 * (mon.b & 1) + 4 * (mon.c & 1) + 8 * (mon.d & 1))];
    std::vector<StructuredMonomial> product;
    product.reserve(residue.term_count());
    for (const auto& t : residue.terms()) {
        product.push_back({checked_add(t.a, even.a), checked_add(t.b, even.b),
                           checked_add(t.c, even.c), checked_add(t.d, even.d)});
    }
    const StructuredPoly result = normalize(p_, StructuredPoly::from_terms(std::move(product)));
    for (const auto& t : result.terms()) {
        if (pole_order(p_, t) > 2 * p_.g - 2) {
            throw std::logic_error(
                "CartierTable::apply: image left the regular span (pole order > 2g-2)");
        }
    }
    return result;
}

StructuredPoly CartierTable::apply(const StructuredPoly& f) const {
    // C is additive, and GF(2) coefficients are fixed by the twist.
    StructuredPoly acc;
    for (const auto& t : f.terms()) acc = acc + apply(t);
    return acc;
}

namespace {

// Runs fn(j) for every column index; jobs > 1 stripes the indices across
// threads.  Worker exceptions are rethrown in the caller.
template <typename Fn>
void for_each_column(size_t count, int jobs, Fn&& fn) {
    if (jobs <= 1 || count < 2) {
        for (size_t j = 0; j < count; ++j) fn(j);
        return;
    }
    const size_t workers = std::min<size_t>(static_cast<size_t>(jobs), count);
    std::vector<std::thread> threads;
    threads.reserve(workers);
    std::exception_ptr failure;
    std::mutex failure_mutex;
    for (size_t w = 0; w < workers; ++w) {
        threads.emplace_back([&, w] {
            try {
                for (size_t j = w; j < count; j += workers) fn(j);
            } catch (...) {
                const std::lock_guard<std::mutex> lock(failure_mutex);
                if (!failure) failure = std::current_exception();
            }
        });
    }
    for (auto& t : threads) t.join();
    if (failure) std::rethrow_exception(failure);
}

} // namespace

BitMatrix build_cartier_matrix(const SuzukiParams& p, const Basis& basis, CartierPath path,
                               int jobs) {
    const size_t g = basis.size();
    std::vector<BitVector> columns(g);

    if (path == CartierPath::structured) {
        const CartierTable table(p);
        for_each_column(g, jobs, [&](size_t j) {
            const StructuredPoly image = table.apply(basis.elements[j]);
            BitVector col(g);
            for (const auto& mon : image.terms()) {
                const auto idx = basis.index_of(mon);
                if (!idx) throw std::logic_error("build_cartier_matrix: image outside basis");
                col.set(*idx);
            }
            columns[j] = std::move(col);
        });
    } else {
        const CoordSolver solver(p, basis.elements);
        std::vector<PlanePoly> embedded(g);
        {
            Embedder emb(p);
            for (size_t j = 0; j < g; ++j) {
                const auto& mon = basis.elements[j];
                embedded[j] = emb.embed(mon.a, mon.b, mon.c, mon.d);
            }
        }
        for_each_column(g, jobs, [&](size_t j) {
            columns[j] = solver.coords(cartier_oracle(p, embedded[j]));
        });
    }

    BitMatrix m(g, g);
    for (size_t j = 0; j < g; ++j) m.set_column(j, columns[j]);
    return m;
}

} // namespace suzuki
