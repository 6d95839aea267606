#include "tilecert/laurent.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace tilecert {

LaurentPoly LaurentPoly::constant(const Rat& c) {
    LaurentPoly p;
    if (c != 0) p.t_.emplace_back(0, c);
    return p;
}

LaurentPoly LaurentPoly::q_power(std::int64_t e, const Rat& c) {
    LaurentPoly p;
    if (c != 0) p.t_.emplace_back(e, c);
    return p;
}

LaurentPoly LaurentPoly::from_terms(std::vector<Term> terms) {
    std::sort(terms.begin(), terms.end(),
              [](const Term& a, const Term& b) { return a.first < b.first; });
    LaurentPoly p;
    for (auto& [e, c] : terms) {
        if (!p.t_.empty() && p.t_.back().first == e) {
            p.t_.back().second += c;
            if (p.t_.back().second == 0) p.t_.pop_back();
        } else if (c != 0) {
            p.t_.emplace_back(e, c);
        }
    }
    return p;
}

bool LaurentPoly::is_one() const {
    return t_.size() == 1 && t_[0].first == 0 && t_[0].second == 1;
}

Rat LaurentPoly::coeff(std::int64_t e) const {
    auto it = std::lower_bound(t_.begin(), t_.end(), e,
                               [](const Term& t, std::int64_t x) { return t.first < x; });
    if (it != t_.end() && it->first == e) return it->second;
    return Rat(0);
}

LaurentPoly LaurentPoly::operator-() const {
    LaurentPoly r = *this;
    for (auto& [e, c] : r.t_) c = -c;
    return r;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
    if (o.t_.empty()) return *this;
    std::vector<Term> out;
    out.reserve(t_.size() + o.t_.size());
    std::size_t i = 0, j = 0;
    while (i < t_.size() && j < o.t_.size()) {
        if (t_[i].first < o.t_[j].first) {
            out.push_back(std::move(t_[i++]));
        } else if (t_[i].first > o.t_[j].first) {
            out.push_back(o.t_[j++]);
        } else {
            Rat c = t_[i].second + o.t_[j].second;
            if (c != 0) out.emplace_back(t_[i].first, std::move(c));
            ++i, ++j;
        }
    }
    for (; i < t_.size(); ++i) out.push_back(std::move(t_[i]));
    for (; j < o.t_.size(); ++j) out.push_back(o.t_[j]);
    t_ = std::move(out);
    return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) { return *this += -o; }

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
    LaurentPoly r;
    if (a.t_.empty() || b.t_.empty()) return r;
    // Schoolbook product via an exponent-keyed accumulator; operand sizes in
    // this project stay small enough that asymptotics do not matter.
    std::map<std::int64_t, Rat> acc;
    for (const auto& [ea, ca] : a.t_)
        for (const auto& [eb, cb] : b.t_) acc[ea + eb] += ca * cb;
    r.t_.reserve(acc.size());
    for (auto& [e, c] : acc)
        if (c != 0) r.t_.emplace_back(e, std::move(c));
    return r;
}

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& o) {
    *this = *this * o;
    return *this;
}

LaurentPoly& LaurentPoly::operator*=(const Rat& c) {
    if (c == 0) {
        t_.clear();
        return *this;
    }
    for (auto& [e, v] : t_) v *= c;
    return *this;
}

LaurentPoly LaurentPoly::shifted(std::int64_t k) const {
    LaurentPoly r = *this;
    for (auto& [e, c] : r.t_) e += k;
    return r;
}

LaurentPoly LaurentPoly::substitute_q_inverse() const {
    LaurentPoly r;
    r.t_.reserve(t_.size());
    for (auto it = t_.rbegin(); it != t_.rend(); ++it) r.t_.emplace_back(-it->first, it->second);
    return r;
}

Rat LaurentPoly::eval_one() const {
    Rat s(0);
    for (const auto& [e, c] : t_) s += c;
    return s;
}

std::string LaurentPoly::str() const {
    if (t_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : t_) {
        if (!first) os << (c > 0 ? " + " : " - ");
        Rat a = first ? c : Rat(abs(c));
        first = false;
        if (e == 0) {
            os << a.get_str();
        } else {
            if (a != 1) os << a.get_str() << "*";
            os << "q";
            if (e != 1) os << "^" << e;
        }
    }
    return os.str();
}

}  // namespace tilecert
