#include "mahler/normalize.hpp"

#include "mahler/errors.hpp"

#include <algorithm>
#include <sstream>

namespace mahler {

namespace {

constexpr size_t kMaxReductions = 100000;

void split_into(const MahlerOperator& L, std::vector<MahlerOperator>& out) {
    if (L.is_zero()) return;
    if (L.mvaluation() == 0) {
        out.push_back(L);
        return;
    }
    for (int64_t i = 0; i < L.radix(); ++i) split_into(operator_section(L, i), out);
}

NormalizeResult reduce_family(std::vector<MahlerOperator> family) {
    NormalizeResult res;
    if (family.empty()) fail(ErrorKind::invariant_violation, "split produced no members");
    while (family.size() >= 2) {
        if (++res.reductions > kMaxReductions) fail(ErrorKind::invariant_violation, "reduction loop does not terminate");
        std::sort(family.begin(), family.end(), reduction_order);
        MahlerOperator r = interreduce(family[0], family[1]);
        family.erase(family.begin());
        split_into(r, family);
    }
    res.raw = family.front();
    ContentSplit cs = primitive_part(res.raw);
    res.content = cs.content;
    res.primitive = cs.primitive;
    return res;
}

}  // namespace

std::string serialize(const MahlerOperator& L) {
    std::ostringstream os;
    os << L.radix();
    for (int k = 0; k <= L.order(); ++k) {
        os << ";" << k << ":";
        for (const auto& [e, c] : L.coeff(k).terms()) os << e << "," << c.get_str() << " ";
    }
    return os.str();
}

bool reduction_order(const MahlerOperator& a, const MahlerOperator& b) {
    if (a.order() != b.order()) return a.order() > b.order();
    if (a.degree() != b.degree()) return a.degree() < b.degree();
    return serialize(a) < serialize(b);
}

std::vector<MahlerOperator> split(const MahlerOperator& L) {
    if (L.is_zero()) fail(ErrorKind::precondition_violation, "split of the zero operator");
    std::vector<MahlerOperator> out;
    split_into(L, out);
    return out;
}

NormalizeResult normalize_l0(const MahlerOperator& L) {
    if (L.is_zero()) fail(ErrorKind::precondition_violation, "normalization of the zero operator");
    return reduce_family(split(L));
}

NormalizeResult gcrd(const std::vector<MahlerOperator>& family) {
    if (family.empty()) fail(ErrorKind::precondition_violation, "gcrd of an empty family");
    int w = -1;
    for (const auto& L : family) {
        if (L.is_zero()) fail(ErrorKind::precondition_violation, "gcrd family contains the zero operator");
        if (L.radix() != family.front().radix()) fail(ErrorKind::unsupported_equation, "gcrd family mixes radices");
        w = w < 0 ? L.mvaluation() : std::min(w, L.mvaluation());
    }
    std::vector<MahlerOperator> members;
    for (const auto& L : family) {
        MahlerOperator stripped(L.radix(), std::vector<Poly>(L.coeffs().begin() + w, L.coeffs().end()));
        split_into(stripped, members);
    }
    NormalizeResult res = reduce_family(std::move(members));
    res.raw = res.raw.times_m_power(w);
    res.primitive = res.primitive.times_m_power(w);
    return res;
}

}  // namespace mahler
