#pragma once

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <set>
#include <type_traits>
#include <utility>

namespace c2mot {

/// A finite Z/2-linear combination of monomials. A monomial is present iff its
/// coefficient is 1, so addition is symmetric difference.
template <class Mono>
class F2Sum {
public:
    using monomial_type = Mono;
    using const_iterator = typename std::set<Mono>::const_iterator;

    F2Sum() = default;
    F2Sum(const Mono& m) { terms_.insert(m); }  // NOLINT(google-explicit-constructor)
    F2Sum(std::initializer_list<Mono> ms) {
        for (const auto& m : ms) toggle(m);
    }

    void toggle(const Mono& m) {
        auto [it, inserted] = terms_.insert(m);
        if (!inserted) terms_.erase(it);
    }
    void toggle(const std::optional<Mono>& m) {
        if (m) toggle(*m);
    }

    F2Sum& operator+=(const F2Sum& other) {
        for (const auto& m : other.terms_) toggle(m);
        return *this;
    }
    friend F2Sum operator+(F2Sum x, const F2Sum& y) { return x += y; }

    bool contains(const Mono& m) const { return terms_.count(m) != 0; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }
    const_iterator begin() const { return terms_.begin(); }
    const_iterator end() const { return terms_.end(); }
    const std::set<Mono>& terms() const { return terms_; }

    friend bool operator==(const F2Sum&, const F2Sum&) = default;

private:
    std::set<Mono> terms_;
};

/// Extends a monomial-level rule f(Mono, Mono) -> F2Sum<R> (or optional<R>) bilinearly.
template <class R, class A, class B, class F>
F2Sum<R> bilinear(const F2Sum<A>& x, const F2Sum<B>& y, F f) {
    F2Sum<R> out;
    for (const auto& mx : x)
        for (const auto& my : y) {
            if constexpr (std::is_same_v<decltype(f(mx, my)), F2Sum<R>>)
                out += f(mx, my);
            else
                out.toggle(f(mx, my));
        }
    return out;
}

/// Extends a monomial-level rule f(Mono) -> F2Sum<R> (or optional<R>) linearly.
template <class R, class A, class F>
F2Sum<R> linear(const F2Sum<A>& x, F f) {
    F2Sum<R> out;
    for (const auto& m : x) {
        if constexpr (std::is_same_v<decltype(f(m)), F2Sum<R>>)
            out += f(m);
        else
            out.toggle(f(m));
    }
    return out;
}

}  // namespace c2mot
