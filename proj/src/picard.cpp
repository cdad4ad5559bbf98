#include "symcyc/picard.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>

#include "symcyc/errors.hpp"

namespace symcyc {

namespace {

using Tag = BasisElement::Tag;

int odd_part(int n) {
    while (n % 2 == 0) n /= 2;
    return n;
}

}  // namespace

std::string BasisElement::label() const {
    std::ostringstream os;
    switch (tag) {
        case Tag::H: return "H";
        case Tag::E: os << "E" << index; break;
        case Tag::Fcyc: os << "F" << index; break;
        case Tag::A: os << "A" << index; break;
        case Tag::V: os << "V" << index; break;
        case Tag::AV: os << "AV" << index; break;
        case Tag::P: os << "P" << index; break;
        case Tag::Pe: os << "Pe" << index; break;
        case Tag::Po: os << "Po" << index; break;
        case Tag::Pev: return "Pe";
        case Tag::Pov: return "Po";
        case Tag::APe: return "APe";
        case Tag::APo: return "APo";
        case Tag::Gamma: os << "G" << index; break;
        case Tag::Ahalf: return "Ahalf";
        case Tag::SymE: return index ? "E^(1)" : "E";
        case Tag::SymA:
            if (index == 0) return "A";
            os << "A^(" << index << ")";
            break;
        case Tag::SymAV: return "AV^(1)";
        case Tag::SymV: return "V^(1)";
        case Tag::SymPw: return "Pw";
        case Tag::SymAPw: return "APw";
        case Tag::SymPwr: os << "Pw(" << index << ")"; break;
    }
    return os.str();
}

int PicMatrix::index_of(const BasisElement& b) const {
    for (size_t i = 0; i < labels.size(); ++i)
        if (labels[i] == b) return static_cast<int>(i);
    throw UnknownDivisor("basis element not present: " + b.label());
}

namespace {

class Builder {
  public:
    explicit Builder(std::vector<BasisElement> labels) : labels_(std::move(labels)) {
        m_ = IntMat(static_cast<int>(labels_.size()), static_cast<int>(labels_.size()));
    }
    int idx(Tag t, int i = 0) const {
        BasisElement b{t, i};
        for (size_t k = 0; k < labels_.size(); ++k)
            if (labels_[k] == b) return static_cast<int>(k);
        throw UnknownDivisor("basis element not present: " + b.label());
    }
    void add(int col, Tag t, int i, Int v) { m_(idx(t, i), col) += v; }
    void add(int col, Tag t, Int v) { m_(idx(t, 0), col) += v; }
    IntMat take() { return std::move(m_); }
    const std::vector<BasisElement>& labels() const { return labels_; }

  private:
    std::vector<BasisElement> labels_;
    IntMat m_;
};

}  // namespace

PicMatrix build_cyclic(int q) {
    if (q < 3) throw UnsupportedQ("cyclic pullback needs q >= 3");
    std::vector<BasisElement> labels{{Tag::H, 0}};
    for (int j = 0; j < q; ++j) {
        labels.push_back({Tag::E, j});
        labels.push_back({Tag::Fcyc, j});
    }
    Builder b(labels);
    int colH = b.idx(Tag::H);
    b.add(colH, Tag::H, Int(q - 1));
    for (int k = 0; k < q; ++k) b.add(colH, Tag::E, k, Int(-(q - 2)));
    for (int j = 0; j < q; ++j) {
        int colE = b.idx(Tag::E, j);
        b.add(colE, Tag::Fcyc, j, 1);
        int colF = b.idx(Tag::Fcyc, j);
        b.add(colF, Tag::H, 0, 1);
        for (int k = 0; k < q; ++k)
            if (k != j) b.add(colF, Tag::E, k, -1);
    }
    PicMatrix pm;
    pm.q = q;
    pm.kind = DivisorCase::CyclicOnly;
    pm.basis = BasisKind::Full;
    pm.map = MapKind::Cyclic;
    pm.labels = labels;
    pm.m = b.take();
    return pm;
}

namespace {

PicMatrix build_odd_full(int q) {
    DivisorProfile pr = build_profile(q);
    const int p = pr.p;
    const auto& S1 = pr.S.at(1);

    std::vector<BasisElement> labels{{Tag::H, 0}, {Tag::E, 0}, {Tag::A, 0}};
    for (int i : S1) {
        labels.push_back({Tag::E, i});
        labels.push_back({Tag::AV, i});
        labels.push_back({Tag::V, i});
        labels.push_back({Tag::A, i});
    }
    for (int r : pr.divisors) {
        labels.push_back({Tag::P, r});
        for (int j : pr.S.at(r)) labels.push_back({Tag::A, j});
    }
    Builder b(labels);

    int colH = b.idx(Tag::H);
    b.add(colH, Tag::H, Int(p));
    b.add(colH, Tag::E, 0, Int(-(p - 1)));
    for (int i : S1) b.add(colH, Tag::E, i, Int(-(p - 1)));
    for (int r : pr.divisors) b.add(colH, Tag::P, r, Int(-(p - pr.mu.at(r))));

    b.add(b.idx(Tag::E, 0), Tag::A, 0, 1);
    {  // strict transform of the coordinate hyperplane through the e_i only
        int col = b.idx(Tag::A, 0);
        b.add(col, Tag::H, 0, 1);
        for (int i : S1) b.add(col, Tag::E, i, -1);
    }
    for (int i : S1) {
        b.add(b.idx(Tag::E, i), Tag::AV, i, 1);
        b.add(b.idx(Tag::AV, i), Tag::V, i, 1);
        b.add(b.idx(Tag::V, i), Tag::A, i, 1);
        int col = b.idx(Tag::A, i);
        b.add(col, Tag::H, 0, 1);
        b.add(col, Tag::E, 0, -1);
        for (int k : S1)
            if (k != i) b.add(col, Tag::E, k, -1);
        for (int r : pr.divisors) b.add(col, Tag::P, r, -1);
    }
    for (int r : pr.divisors) {
        int colP = b.idx(Tag::P, r);
        for (int j : pr.S.at(r)) b.add(colP, Tag::A, j, 1);
        std::vector<int> keep = I_set(pr, r);
        for (int j : pr.S.at(r)) {
            int col = b.idx(Tag::A, j);
            b.add(col, Tag::H, 0, 1);
            b.add(col, Tag::E, 0, -1);
            for (int k : S1) b.add(col, Tag::E, k, -1);
            for (int s : pr.divisors)
                if (std::find(keep.begin(), keep.end(), s) == keep.end())
                    b.add(col, Tag::P, s, -1);
        }
    }
    PicMatrix pm;
    pm.q = q;
    pm.kind = pr.kind;
    pm.basis = BasisKind::Full;
    pm.labels = b.labels();
    pm.m = b.take();
    return pm;
}

PicMatrix build_twice_odd_full(int q) {
    DivisorProfile pr = build_profile(q);
    const int p = pr.p;

    std::vector<BasisElement> labels{{Tag::H, 0}, {Tag::E, 0}, {Tag::E, p}};
    for (int j = 0; j <= p; ++j) labels.push_back({Tag::A, j});
    labels.push_back({Tag::Pev, 0});
    labels.push_back({Tag::Pov, 0});
    labels.push_back({Tag::APe, 0});
    labels.push_back({Tag::APo, 0});
    for (int r : pr.divisors) {
        labels.push_back({Tag::Pe, r});
        labels.push_back({Tag::Po, r});
        labels.push_back({Tag::P, r});
    }
    Builder b(labels);

    int colH = b.idx(Tag::H);
    b.add(colH, Tag::H, Int(p));
    b.add(colH, Tag::E, 0, Int(-(p - 1)));
    b.add(colH, Tag::E, p, Int(-(p - 1)));
    b.add(colH, Tag::Pev, Int(-(p - (p + 1) / 2)));
    b.add(colH, Tag::Pov, Int(-(p - (p + 1) / 2)));
    for (int r : pr.divisors) {
        b.add(colH, Tag::Pe, r, Int(-(p - pr.mu.at(r))));
        b.add(colH, Tag::Po, r, Int(-(p - pr.mu.at(r))));
        b.add(colH, Tag::P, r, Int(-(p - p / r - 1)));
    }

    b.add(b.idx(Tag::E, 0), Tag::A, 0, 1);
    b.add(b.idx(Tag::E, p), Tag::A, p, 1);
    {
        int col = b.idx(Tag::A, 0);
        b.add(col, Tag::H, 0, 1);
        b.add(col, Tag::E, p, -1);
        b.add(col, Tag::Pov, -1);
        for (int r : pr.divisors) b.add(col, Tag::Po, r, -1);
    }
    {
        int col = b.idx(Tag::A, p);
        b.add(col, Tag::H, 0, 1);
        b.add(col, Tag::E, 0, -1);
        b.add(col, Tag::Pev, -1);
        for (int r : pr.divisors) b.add(col, Tag::Pe, r, -1);
    }
    auto base = [&](int col) {
        b.add(col, Tag::H, 0, 1);
        b.add(col, Tag::E, 0, -1);
        b.add(col, Tag::E, p, -1);
    };
    for (int i : pr.S.at(1)) {
        int col = b.idx(Tag::A, i);
        base(col);
        b.add(col, Tag::Pev, -1);
        for (int r : pr.divisors) {
            b.add(col, Tag::Pe, r, -1);
            b.add(col, Tag::Po, r, -1);
            b.add(col, Tag::P, r, -1);
        }
    }
    for (int i : pr.S.at(2)) {
        int col = b.idx(Tag::A, i);
        base(col);
        b.add(col, Tag::Pov, -1);
        for (int r : pr.divisors) {
            b.add(col, Tag::Po, r, -1);
            b.add(col, Tag::Pe, r, -1);
            b.add(col, Tag::P, r, -1);
        }
    }
    for (int r : pr.divisors) {
        std::vector<int> keep = I_set(pr, r);
        auto kept = [&](int s) { return std::find(keep.begin(), keep.end(), s) != keep.end(); };
        for (int i : pr.S.at(r)) {  // odd multiples: the odd-support fibers they meet survive
            int col = b.idx(Tag::A, i);
            base(col);
            b.add(col, Tag::Pev, -1);
            for (int s : pr.divisors) {
                b.add(col, Tag::Pe, s, -1);
                if (!kept(s)) b.add(col, Tag::Po, s, -1);
                if (!kept(s)) b.add(col, Tag::P, s, -1);
            }
        }
        for (int i : pr.S.at(2 * r)) {
            int col = b.idx(Tag::A, i);
            base(col);
            b.add(col, Tag::Pov, -1);
            for (int s : pr.divisors) {
                b.add(col, Tag::Po, s, -1);
                if (!kept(s)) b.add(col, Tag::Pe, s, -1);
                if (!kept(s)) b.add(col, Tag::P, s, -1);
            }
        }
        int colPe = b.idx(Tag::Pe, r);
        for (int i : pr.S.at(2 * r)) b.add(colPe, Tag::A, i, 1);
        int colPo = b.idx(Tag::Po, r);
        for (int i : pr.S.at(r)) b.add(colPo, Tag::A, i, 1);
        // P_r pulls back to nothing: its column stays zero
    }
    {
        int col = b.idx(Tag::Pev);
        b.add(col, Tag::APe, 0, 1);
        for (int i : pr.S.at(2)) b.add(col, Tag::A, i, 1);
        col = b.idx(Tag::Pov);
        b.add(col, Tag::APo, 0, 1);
        for (int i : pr.S.at(1)) b.add(col, Tag::A, i, 1);
        b.add(b.idx(Tag::APe), Tag::Pov, 1);
        b.add(b.idx(Tag::APo), Tag::Pev, 1);
    }
    PicMatrix pm;
    pm.q = q;
    pm.kind = pr.kind;
    pm.basis = BasisKind::Full;
    pm.labels = b.labels();
    pm.m = b.take();
    return pm;
}

PicMatrix build_div4_full(int q) {
    DivisorProfile pr = build_profile(q);
    const int p = pr.p;

    std::vector<BasisElement> labels{{Tag::H, 0},      {Tag::E, 0}, {Tag::E, p},
                                     {Tag::A, 0},      {Tag::A, p}, {Tag::Ahalf, 0}};
    for (int r : pr.r_list) {
        std::vector<int> is = pr.S.at(r);
        for (int i : pr.S.at(2 * r)) is.push_back(i);
        std::sort(is.begin(), is.end());
        for (int i : is) labels.push_back({Tag::A, i});
    }
    for (int r : pr.r_list) {
        labels.push_back({Tag::Pe, r});
        labels.push_back({Tag::Po, r});
    }
    for (int rho : pr.rho_list) labels.push_back({Tag::Gamma, rho});
    Builder b(labels);

    int colH = b.idx(Tag::H);
    b.add(colH, Tag::H, Int(p));
    b.add(colH, Tag::E, 0, Int(-(p - 1)));
    b.add(colH, Tag::E, p, Int(-(p - 1)));
    b.add(colH, Tag::Ahalf, Int(-(p - (p / 2 + 1))));
    for (int r : pr.r_list) {
        b.add(colH, Tag::Pe, r, Int(-(p - pr.mu.at(r))));
        b.add(colH, Tag::Po, r, Int(-(p - pr.mu.at(r))));
    }
    for (int rho : pr.rho_list) b.add(colH, Tag::Gamma, rho, Int(-(p / (2 * rho) - 1)));

    b.add(b.idx(Tag::E, 0), Tag::A, 0, 1);
    b.add(b.idx(Tag::E, p), Tag::A, p, 1);
    {
        int col = b.idx(Tag::A, 0);
        b.add(col, Tag::H, 0, 1);
        b.add(col, Tag::E, p, -1);
        for (int r : pr.r_list) b.add(col, Tag::Po, r, -1);
    }
    {
        int col = b.idx(Tag::A, p);
        b.add(col, Tag::H, 0, 1);
        b.add(col, Tag::E, 0, -1);
        for (int r : pr.r_list) b.add(col, Tag::Pe, r, -1);
    }
    auto base = [&](int col) {
        b.add(col, Tag::H, 0, 1);
        b.add(col, Tag::E, 0, -1);
        b.add(col, Tag::E, p, -1);
    };
    {
        // column of the fiber over a_{p/2}: the hyperplane with vanishing
        // middle coordinate contains every even- and odd-support fiber, the
        // vanishing-subspaces indexed by rho with (p/2)/rho odd, and, when
        // p/2 is odd, the point a_{p/2} itself
        int col = b.idx(Tag::Ahalf);
        base(col);
        for (int r : pr.r_list) {
            b.add(col, Tag::Pe, r, -1);
            b.add(col, Tag::Po, r, -1);
        }
        for (int rho : pr.rho_list)
            if ((p / 2) % rho == 0 && ((p / 2) / rho) % 2 == 1) b.add(col, Tag::Gamma, rho, -1);
        if ((p / 2) % 2 == 1) b.add(col, Tag::Ahalf, -1);
    }
    for (int r : pr.r_list) {
        std::vector<int> keep = I_set(pr, r);
        auto kept = [&](int s) { return std::find(keep.begin(), keep.end(), s) != keep.end(); };
        for (int i : pr.S.at(r)) {
            int col = b.idx(Tag::A, i);
            base(col);
            for (int s : pr.r_list) {
                b.add(col, Tag::Pe, s, -1);
                if (!kept(s)) b.add(col, Tag::Po, s, -1);
            }
        }
        for (int i : pr.S.at(2 * r)) {
            int col = b.idx(Tag::A, i);
            base(col);
            for (int s : pr.r_list) {
                b.add(col, Tag::Po, s, -1);
                if (!kept(s)) b.add(col, Tag::Pe, s, -1);
            }
        }
        int colPe = b.idx(Tag::Pe, r);
        for (int i : pr.S.at(2 * r)) b.add(colPe, Tag::A, i, 1);
        int colPo = b.idx(Tag::Po, r);
        for (int i : pr.S.at(r)) b.add(colPo, Tag::A, i, 1);
    }
    for (int rho : pr.rho_list) {
        // pullback of the fiber over the vanishing subspace of rho: the
        // coordinate hyperplanes indexed by the partner family land in it,
        // and so does the partner fiber itself
        int col = b.idx(Tag::Gamma, rho);
        int rc = pr.rho_check(rho);
        int k = static_cast<int>(pr.S.at(rc).size());
        b.add(col, Tag::H, 0, Int(k));
        b.add(col, Tag::E, 0, Int(-k));
        b.add(col, Tag::E, p, Int(-k));
        if (rc % 2 == 1) b.add(col, Tag::Ahalf, Int(-k));
        for (int r : pr.r_list) {
            b.add(col, Tag::Pe, r, Int(-k));
            b.add(col, Tag::Po, r, Int(-k));
        }
        for (int rho2 : pr.rho_list)
            if (rc % rho2 == 0 && (rc / rho2) % 2 == 1) b.add(col, Tag::Gamma, rho2, Int(-k));
        b.add(col, Tag::Gamma, rc, 1);
    }
    PicMatrix pm;
    pm.q = q;
    pm.kind = pr.kind;
    pm.basis = BasisKind::Full;
    pm.labels = b.labels();
    pm.m = b.take();
    return pm;
}

BasisElement sym_class_of(const BasisElement& e, const DivisorProfile& pr) {
    switch (pr.kind) {
        case DivisorCase::OddPrime:
        case DivisorCase::Odd: {
            if (e.tag == Tag::E && e.index != 0) return {Tag::SymE, 1};
            if (e.tag == Tag::AV) return {Tag::SymAV, 0};
            if (e.tag == Tag::V) return {Tag::SymV, 0};
            if (e.tag == Tag::A && e.index != 0)
                return {Tag::SymA, std::gcd(e.index, pr.q) == 1 ? 1 : std::gcd(e.index, pr.q)};
            return e;
        }
        case DivisorCase::TwiceOdd: {
            if (e.tag == Tag::E) return {Tag::SymE, 0};
            if (e.tag == Tag::A) {
                if (e.index == 0 || e.index == pr.p) return {Tag::SymA, 0};
                int g = std::gcd(e.index, pr.q);
                int r = g % 2 == 0 ? g / 2 : g;
                return {Tag::SymA, r == 1 ? 1 : r};
            }
            if (e.tag == Tag::Pev || e.tag == Tag::Pov) return {Tag::SymPw, 0};
            if (e.tag == Tag::APe || e.tag == Tag::APo) return {Tag::SymAPw, 0};
            if (e.tag == Tag::Pe || e.tag == Tag::Po) return {Tag::SymPwr, e.index};
            return e;
        }
        case DivisorCase::DivisibleBy4: {
            if (e.tag == Tag::E) return {Tag::SymE, 0};
            if (e.tag == Tag::A) {
                if (e.index == 0 || e.index == pr.p) return {Tag::SymA, 0};
                int g = std::gcd(e.index, pr.q);
                bool in_r = std::find(pr.r_list.begin(), pr.r_list.end(), g) != pr.r_list.end();
                return {Tag::SymA, in_r ? g : g / 2};
            }
            if (e.tag == Tag::Pe || e.tag == Tag::Po) return {Tag::SymPwr, e.index};
            return e;
        }
        default: return e;
    }
}

}  // namespace

PicMatrix symmetrize(const PicMatrix& full) {
    DivisorProfile pr = build_profile(full.q);
    // the nilpotent full-support fibers drop out of the consolidated basis
    auto dropped = [&](const BasisElement& e) {
        return pr.kind == DivisorCase::TwiceOdd && e.tag == Tag::P;
    };
    std::vector<BasisElement> sym_labels;
    std::vector<int> rep(full.labels.size(), -1);  // representative row per class
    auto class_index = [&](const BasisElement& c) {
        for (size_t k = 0; k < sym_labels.size(); ++k)
            if (sym_labels[k] == c) return static_cast<int>(k);
        return -1;
    };
    std::vector<int> row_class(full.labels.size(), -1);
    for (size_t i = 0; i < full.labels.size(); ++i) {
        if (dropped(full.labels[i])) continue;
        BasisElement c = sym_class_of(full.labels[i], pr);
        int k = class_index(c);
        if (k < 0) {
            sym_labels.push_back(c);
            k = static_cast<int>(sym_labels.size()) - 1;
            rep[static_cast<size_t>(k)] = static_cast<int>(i);
        }
        row_class[i] = k;
    }
    rep.resize(sym_labels.size());

    IntMat sm(static_cast<int>(sym_labels.size()), static_cast<int>(sym_labels.size()));
    for (size_t col = 0; col < full.labels.size(); ++col) {
        if (dropped(full.labels[col])) continue;
        int sc = row_class[col];
        for (size_t row = 0; row < full.labels.size(); ++row) {
            if (row_class[row] < 0) continue;
            if (static_cast<int>(row) != rep[static_cast<size_t>(row_class[row])]) continue;
            sm(row_class[row], sc) += full.m(static_cast<int>(row), static_cast<int>(col));
        }
    }
    PicMatrix pm;
    pm.q = full.q;
    pm.kind = full.kind;
    pm.basis = BasisKind::Symmetrized;
    pm.map = full.map;
    pm.labels = std::move(sym_labels);
    pm.m = std::move(sm);
    return pm;
}

PicMatrix build_odd(int q, BasisKind basis) {
    if (q < 3 || q % 2 == 0) throw UnsupportedQ("odd builder needs odd q >= 3");
    PicMatrix full = build_odd_full(q);
    return basis == BasisKind::Full ? full : symmetrize(full);
}

PicMatrix build_twice_odd(int q, BasisKind basis) {
    if (q < 6 || q % 4 != 2) throw UnsupportedQ("builder needs q = 2 mod 4, q >= 6");
    PicMatrix full = build_twice_odd_full(q);
    return basis == BasisKind::Full ? full : symmetrize(full);
}

PicMatrix build_div4(int q, BasisKind basis) {
    if (q < 8 || q % 4 != 0) throw UnsupportedQ("builder needs q = 0 mod 4, q >= 8");
    PicMatrix full = build_div4_full(q);
    return basis == BasisKind::Full ? full : symmetrize(full);
}

PicMatrix build_pullback(int q, BasisKind basis) {
    if (q < 3) throw UnsupportedQ("q must be at least 3");
    if (q % 2 == 1) return build_odd(q, basis);
    if (q % 4 == 2) return build_twice_odd(q, basis);
    return build_div4(q, basis);
}

namespace {

IntPoly x2_minus(int kappa) { return IntPoly{Int(-kappa), Int(0), Int(1)}; }

ClosedFormParts closed_form_common(int p, const DivisorProfile& pr, bool twice_odd) {
    const auto& divs = pr.divisors;
    std::map<int, IntPoly> T;
    auto prod_excluding = [&](int skip) {
        IntPoly acc{Int(1)};
        for (int s : divs)
            if (s != skip) acc *= x2_minus(pr.kappa.at(s));
        return acc;
    };
    auto is_prime = [](int n) {
        if (n < 2) return false;
        for (int d = 2; d * d <= n; ++d)
            if (n % d == 0) return false;
        return true;
    };
    // divisor polynomials, built bottom-up through the divisor lattice
    std::vector<int> order = divs;
    std::sort(order.begin(), order.end());
    for (int r : order) {
        if (is_prime(r)) {
            T[r] = Int(pr.kappa.at(r)) * prod_excluding(r);
        } else {
            IntPoly acc;
            for (int s : order)
                if (s < r && r % s == 0) acc += T.at(s);
            IntPoly scaled = Int(pr.kappa.at(r)) * acc;
            T[r] = scaled.div_exact(x2_minus(pr.kappa.at(r))) +
                   Int(pr.kappa.at(r)) * prod_excluding(r);
        }
    }
    IntPoly T0 = prod_excluding(0);
    for (int r : order) T0 += T.at(r);

    const IntPoly x{Int(0), Int(1)};
    const IntPoly one{Int(1)};
    IntPoly full;
    if (!twice_odd) {
        const int kappa = pr.kappa_1;
        IntPoly x4m1 = IntPoly{Int(-1), Int(0), Int(0), Int(0), Int(1)};
        full = (x - Int(p) * one) * x4m1 * prod_excluding(0) +
               Int(kappa) * (x - one) * prod_excluding(0) +
               (x - one) * IntPoly{Int(1), Int(0), Int(1)} * T0;
        for (int r : order)
            full += (x - Int(pr.mu.at(r)) * one) * x4m1 * T.at(r);
    } else {
        const int kappa = pr.kappa_1;
        const int mu0 = (p + 1) / 2;
        IntPoly x2m1{Int(-1), Int(0), Int(1)};
        full = (x - Int(p) * one) * IntPoly{Int(-kappa - 1), Int(0), Int(1)} * prod_excluding(0) +
               Int(2 * kappa) * (x - Int(mu0) * one) * prod_excluding(0) +
               Int(2) * (x - one) * T0;
        for (int r : order)
            full += Int(2) * (x - Int(pr.mu.at(r)) * one) * x2m1 * T.at(r);
    }
    ClosedFormParts parts;
    for (int r : order) parts.T.emplace_back(r, T.at(r));
    parts.T0 = std::move(T0);
    parts.full = std::move(full);
    return parts;
}

}  // namespace

ClosedFormParts closed_form_odd_parts(int q) {
    DivisorProfile pr = build_profile(q);
    if (pr.kind != DivisorCase::Odd)
        throw UnsupportedQ("closed form needs odd composite q");
    return closed_form_common(pr.p, pr, false);
}

IntPoly closed_form_odd(int q) { return closed_form_odd_parts(q).full; }

ClosedFormParts closed_form_twice_odd_parts(int q) {
    DivisorProfile pr = build_profile(q);
    if (pr.kind != DivisorCase::TwiceOdd)
        throw UnsupportedQ("closed form needs q = 2 mod 4");
    return closed_form_common(pr.p, pr, true);
}

IntPoly closed_form_twice_odd(int q) { return closed_form_twice_odd_parts(q).full; }

IntPoly block_determinant_Mn(const std::vector<Int>& a) {
    IntPoly acc{Int(1)};
    for (const Int& aj : a) acc *= IntPoly{-aj, Int(0), Int(1)};
    return acc;
}

IntPoly block_determinant_Mprime(const std::vector<Int>& a) {
    const size_t n = a.size();
    if (n < 2) throw std::invalid_argument("bordered block determinant needs n >= 2");
    if (n == 2) return IntPoly{-(a[0] * a[1])};
    IntPoly sum;
    for (size_t k = 2; k <= n - 1; ++k) {
        IntPoly prod{Int(1)};
        for (size_t j = 2; j < k; ++j) prod *= IntPoly{-a[j - 1], Int(0), Int(1)};
        std::vector<Int> tail(a.begin() + static_cast<long>(k - 1), a.end());
        sum += prod * block_determinant_Mprime(tail);
    }
    IntPoly prod_all{Int(1)};
    for (size_t j = 2; j <= n - 1; ++j) prod_all *= IntPoly{-a[j - 1], Int(0), Int(1)};
    sum -= IntPoly{a.back()} * prod_all;
    return IntPoly{a.front()} * sum;
}

IntPoly cofactor_determinant(const std::vector<std::vector<IntPoly>>& m) {
    const size_t n = m.size();
    if (n == 0) return IntPoly{Int(1)};
    if (n == 1) return m[0][0];
    IntPoly det;
    for (size_t j = 0; j < n; ++j) {
        if (m[0][j].is_zero()) continue;
        std::vector<std::vector<IntPoly>> minor;
        minor.reserve(n - 1);
        for (size_t i = 1; i < n; ++i) {
            std::vector<IntPoly> row;
            row.reserve(n - 1);
            for (size_t k = 0; k < n; ++k)
                if (k != j) row.push_back(m[i][k]);
            minor.push_back(std::move(row));
        }
        IntPoly term = m[0][j] * cofactor_determinant(minor);
        if (j % 2 == 0)
            det += term;
        else
            det -= term;
    }
    return det;
}

namespace {

std::vector<std::vector<IntPoly>> zero_block_matrix(size_t n) {
    return std::vector<std::vector<IntPoly>>(n, std::vector<IntPoly>(n));
}

}  // namespace

std::vector<std::vector<IntPoly>> literal_Mn(const std::vector<Int>& a) {
    const size_t n = a.size();
    auto m = zero_block_matrix(2 * n);
    const IntPoly minus_x{Int(0), Int(-1)};
    for (size_t b = 0; b < n; ++b) {
        m[2 * b][2 * b] = minus_x;
        m[2 * b][2 * b + 1] = IntPoly{a[b]};
        m[2 * b + 1][2 * b] = IntPoly{Int(1)};
        m[2 * b + 1][2 * b + 1] = minus_x;
        for (size_t c = b + 1; c < n; ++c) m[2 * b][2 * c + 1] = IntPoly{a[c]};
    }
    return m;
}

std::vector<std::vector<IntPoly>> literal_Mprime(const std::vector<Int>& a) {
    const size_t n = a.size();
    auto top = literal_Mn(std::vector<Int>(a.begin(), a.end() - 1));
    auto m = zero_block_matrix(2 * n);
    for (size_t i = 0; i < 2 * (n - 1); ++i)
        for (size_t j = 0; j < 2 * (n - 1); ++j) m[i][j] = top[i][j];
    for (size_t b = 0; b + 1 < n; ++b) m[2 * b][2 * n - 1] = IntPoly{a.back()};
    m[2 * n - 2][1] = IntPoly{a.front()};
    m[2 * n - 1][2 * n - 2] = IntPoly{Int(1)};
    m[2 * n - 1][2 * n - 1] = IntPoly{Int(0), Int(-1)};
    return m;
}

std::string matrix_to_json(const PicMatrix& pm) {
    std::ostringstream os;
    os << "{\"q\":" << pm.q << ",\"case\":\"" << to_string(pm.kind) << "\",\"basis\":\""
       << (pm.basis == BasisKind::Full ? "full" : "symmetrized") << "\",\"labels\":[";
    for (int i = 0; i < pm.size(); ++i) {
        if (i) os << ",";
        os << "\"" << pm.labels[static_cast<size_t>(i)].label() << "\"";
    }
    os << "],\"entries\":[";
    for (int i = 0; i < pm.size(); ++i) {
        if (i) os << ",";
        os << "[";
        for (int j = 0; j < pm.size(); ++j) {
            if (j) os << ",";
            os << "\"" << pm.m(i, j).str() << "\"";
        }
        os << "]";
    }
    os << "]}";
    return os.str();
}

std::string matrix_to_csv(const PicMatrix& pm) {
    std::ostringstream os;
    os << "label";
    for (int j = 0; j < pm.size(); ++j) os << "," << pm.labels[static_cast<size_t>(j)].label();
    os << "\n";
    for (int i = 0; i < pm.size(); ++i) {
        os << pm.labels[static_cast<size_t>(i)].label();
        for (int j = 0; j < pm.size(); ++j) os << "," << pm.m(i, j).str();
        os << "\n";
    }
    return os.str();
}

}  // namespace symcyc
