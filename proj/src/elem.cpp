#include "tsys/elem.hpp"

namespace tsys {

const char* tag_name(Tag t) {
    switch (t) {
        case Tag::zero: return "zero";
        case Tag::tangible: return "tangible";
        case Tag::ghost: return "ghost";
        case Tag::interval: return "interval";
        case Tag::symbol: return "symbol";
        case Tag::pair: return "pair";
    }
    return "?";
}

Elem Elem::symbol(int i) {
    Elem e;
    e.tag_ = Tag::symbol;
    e.index_ = i;
    return e;
}

Elem Elem::pair(Elem pos, Elem neg) {
    Elem e;
    e.tag_ = Tag::pair;
    e.pair_ = std::make_shared<const std::array<Elem, 2>>(std::array<Elem, 2>{std::move(pos), std::move(neg)});
    return e;
}

int Elem::compare(const Elem& o) const {
    if (tag_ != o.tag_) return tag_ < o.tag_ ? -1 : 1;
    switch (tag_) {
        case Tag::zero: return 0;
        case Tag::tangible:
        case Tag::ghost:
        case Tag::interval: return value_.compare(o.value_);
        case Tag::symbol: return index_ == o.index_ ? 0 : (index_ < o.index_ ? -1 : 1);
        case Tag::pair: {
            if (pair_ == o.pair_) return 0;
            int c = pos().compare(o.pos());
            return c != 0 ? c : neg().compare(o.neg());
        }
    }
    return 0;
}

std::string Elem::debug() const {
    switch (tag_) {
        case Tag::zero: return "zero";
        case Tag::tangible: return value_.str();
        case Tag::ghost: return value_.str() + "°";
        case Tag::interval: return "[-inf," + value_.str() + "]";
        case Tag::symbol: return "#" + std::to_string(index_);
        case Tag::pair: return "(" + pos().debug() + "," + neg().debug() + ")";
    }
    return "?";
}

}  // namespace tsys
