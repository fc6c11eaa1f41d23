#pragma once

// Tagged carrier element. Which tags are legal is decided by the owning System.

#include "tsys/rational.hpp"

#include <array>
#include <memory>
#include <string>

namespace tsys {

enum class Tag : unsigned char { zero, tangible, ghost, interval, symbol, pair };

const char* tag_name(Tag t);

class Elem {
public:
    Elem() = default;  // zero

    static Elem zero() { return Elem(); }
    static Elem tangible(Rational v) { return Elem(Tag::tangible, std::move(v)); }
    static Elem ghost(Rational v) { return Elem(Tag::ghost, std::move(v)); }
    static Elem interval(Rational v) { return Elem(Tag::interval, std::move(v)); }
    static Elem symbol(int i);
    static Elem pair(Elem pos, Elem neg);

    Tag tag() const { return tag_; }
    bool is_zero() const { return tag_ == Tag::zero; }
    const Rational& value() const { return value_; }
    int index() const { return index_; }
    const Elem& pos() const { return (*pair_)[0]; }
    const Elem& neg() const { return (*pair_)[1]; }

    // Total order: by tag, then payload. Used for canonical containers only.
    int compare(const Elem& o) const;
    bool operator==(const Elem& o) const { return compare(o) == 0; }
    bool operator!=(const Elem& o) const { return compare(o) != 0; }
    bool operator<(const Elem& o) const { return compare(o) < 0; }

    std::string debug() const;

private:
    Elem(Tag t, Rational v) : tag_(t), value_(std::move(v)) {}

    Tag tag_ = Tag::zero;
    Rational value_;
    int index_ = -1;
    std::shared_ptr<const std::array<Elem, 2>> pair_;
};

}  // namespace tsys
