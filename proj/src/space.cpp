#include "qho/space.hpp"

#include <utility>

#include "qho/errors.hpp"

namespace qho {

SpaceObject SpaceObject::base(std::size_t d) {
    SpaceObject s;
    s.kind_ = Kind::Base;
    s.dim_ = d;
    return s;
}

SpaceObject SpaceObject::unit() {
    return SpaceObject{};
}

SpaceObject SpaceObject::zero() {
    return biproduct({});
}

SpaceObject SpaceObject::tensor(SpaceObject left, SpaceObject right) {
    return tensor_list({std::move(left), std::move(right)});
}

SpaceObject SpaceObject::tensor_list(std::vector<SpaceObject> parts) {
    if (parts.empty()) return unit();
    if (parts.size() == 1) return std::move(parts.front());
    SpaceObject s;
    s.kind_ = Kind::Tensor;
    s.dim_ = 1;
    for (const auto& p : parts) s.dim_ *= p.dim();
    s.parts_ = std::move(parts);
    return s;
}

SpaceObject SpaceObject::biproduct(std::vector<SpaceObject> parts) {
    SpaceObject s;
    s.kind_ = Kind::Biproduct;
    s.dim_ = 0;
    for (const auto& p : parts) s.dim_ += p.dim();
    s.parts_ = std::move(parts);
    return s;
}

SpaceObject SpaceObject::fock(SpaceObject base, std::size_t cutoff, std::size_t dim) {
    SpaceObject s;
    s.kind_ = Kind::Fock;
    s.dim_ = dim;
    s.cutoff_ = cutoff;
    s.parts_.push_back(std::move(base));
    return s;
}

SpaceObject SpaceObject::dual(SpaceObject inner) {
    if (inner.kind_ == Kind::Dual) return inner.parts_.front();  // involutive
    SpaceObject s;
    s.kind_ = Kind::Dual;
    s.dim_ = inner.dim();
    s.parts_.push_back(std::move(inner));
    return s;
}

SpaceObject SpaceObject::canonical() const {
    if (dim_ == 0) {
        SpaceObject z;
        z.kind_ = Kind::Biproduct;
        z.dim_ = 0;
        return z;
    }
    switch (kind_) {
        case Kind::Unit:
            return *this;
        case Kind::Base:
            if (dim_ == 1) return unit();
            return *this;
        case Kind::Dual: {
            SpaceObject inner = parts_.front().canonical();
            if (inner.kind_ == Kind::Unit) return inner;
            if (inner.kind_ == Kind::Dual) return inner.parts_.front();
            SpaceObject s;
            s.kind_ = Kind::Dual;
            s.dim_ = inner.dim_;
            s.parts_.push_back(std::move(inner));
            return s;
        }
        case Kind::Tensor: {
            std::vector<SpaceObject> flat;
            for (const auto& p : parts_) {
                SpaceObject c = p.canonical();
                if (c.kind_ == Kind::Unit) continue;  // strict unitors
                if (c.kind_ == Kind::Tensor) {        // strict associator
                    for (auto& q : c.parts_) flat.push_back(std::move(q));
                } else {
                    flat.push_back(std::move(c));
                }
            }
            if (flat.empty()) return unit();
            if (flat.size() == 1) return std::move(flat.front());
            SpaceObject s;
            s.kind_ = Kind::Tensor;
            s.dim_ = dim_;
            s.parts_ = std::move(flat);
            return s;
        }
        case Kind::Biproduct: {
            SpaceObject s;
            s.kind_ = Kind::Biproduct;
            s.dim_ = dim_;
            s.parts_.reserve(parts_.size());
            for (const auto& p : parts_) s.parts_.push_back(p.canonical());
            return s;
        }
        case Kind::Fock: {
            SpaceObject s;
            s.kind_ = Kind::Fock;
            s.dim_ = dim_;
            s.cutoff_ = cutoff_;
            s.parts_.push_back(parts_.front().canonical());
            return s;
        }
    }
    return *this;
}

bool SpaceObject::canon_equal(const SpaceObject& a, const SpaceObject& b) {
    if (a.kind_ != b.kind_ || a.dim_ != b.dim_ || a.cutoff_ != b.cutoff_) return false;
    if (a.parts_.size() != b.parts_.size()) return false;
    for (std::size_t i = 0; i < a.parts_.size(); ++i) {
        if (!canon_equal(a.parts_[i], b.parts_[i])) return false;
    }
    return true;
}

bool operator==(const SpaceObject& a, const SpaceObject& b) {
    if (a.dim_ != b.dim_) return false;
    return SpaceObject::canon_equal(a.canonical(), b.canonical());
}

std::string SpaceObject::describe() const {
    switch (kind_) {
        case Kind::Unit:
            return "I";
        case Kind::Base:
            return "C^" + std::to_string(dim_);
        case Kind::Dual: {
            const SpaceObject& inner = parts_.front();
            const bool wrap =
                inner.kind() == Kind::Tensor || inner.kind() == Kind::Biproduct;
            return wrap ? "(" + inner.describe() + ")*" : inner.describe() + "*";
        }
        case Kind::Tensor: {
            std::string out;
            for (std::size_t i = 0; i < parts_.size(); ++i) {
                if (i) out += "(x)";
                const auto& p = parts_[i];
                bool wrap = p.kind() == Kind::Tensor || p.kind() == Kind::Biproduct;
                out += wrap ? "(" + p.describe() + ")" : p.describe();
            }
            return out;
        }
        case Kind::Biproduct: {
            if (parts_.empty()) return "0";
            std::string out;
            for (std::size_t i = 0; i < parts_.size(); ++i) {
                if (i) out += "(+)";
                const auto& p = parts_[i];
                bool wrap = p.kind() == Kind::Tensor || p.kind() == Kind::Biproduct;
                out += wrap ? "(" + p.describe() + ")" : p.describe();
            }
            return out;
        }
        case Kind::Fock:
            return "F(" + parts_.front().describe() + ";N=" + std::to_string(cutoff_) + ")";
    }
    return "?";
}

namespace {

std::size_t fock_sector_of_index(const SpaceObject& fockspace, std::size_t index) {
    // Sector dims are not stored on the object; recover them by walking the
    // cumulative dimension. Sector n of F(A) has dim binom(d+n-1, n).
    const std::size_t d = fockspace.parts().front().dim();
    std::size_t sector = 0;
    std::size_t offset = 0;
    std::size_t sector_dim = 1;  // n = 0
    while (sector <= fockspace.cutoff()) {
        if (index < offset + sector_dim) return sector;
        offset += sector_dim;
        // binom(d+n, n+1) = binom(d+n-1, n) * (d+n) / (n+1)
        sector_dim = sector_dim * (d + sector) / (sector + 1);
        ++sector;
    }
    throw IndexOutOfRange("index " + std::to_string(index) + " outside " + fockspace.describe());
}

}  // namespace

std::size_t index_degree(const SpaceObject& space, std::size_t index) {
    switch (space.kind()) {
        case SpaceObject::Kind::Fock:
            return fock_sector_of_index(space, index);
        case SpaceObject::Kind::Tensor: {
            // row-major mixed radix decomposition across the factors
            std::size_t degree = 0;
            std::size_t rest = index;
            std::size_t radix = space.dim();
            for (const auto& p : space.parts()) {
                radix /= p.dim();
                degree += index_degree(p, rest / radix);
                rest %= radix;
            }
            return degree;
        }
        case SpaceObject::Kind::Dual:
            return index_degree(space.parts().front(), index);
        default:
            return 0;
    }
}

}  // namespace qho
