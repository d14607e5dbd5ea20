#pragma once

#include <compare>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "puiseux/errors.hpp"

namespace puiseux {

enum class VarKind { A, C, Structural };

/// Variable descriptor: coefficient variables A_i and C_{i,j}, or one of the
/// structural variables X, Y, T, z.
struct VarDescriptor {
    VarKind kind = VarKind::Structural;
    long i = 0;
    long j = 0;
    char tag = 0; // 'X', 'Y', 'T' or 'z' for structural variables

    static VarDescriptor A(long i) { return {VarKind::A, i, 0, 0}; }
    static VarDescriptor C(long i, long j) { return {VarKind::C, i, j, 0}; }
    static VarDescriptor structural(char tag) {
        if (tag != 'X' && tag != 'Y' && tag != 'T' && tag != 'z')
            fail(Errc::usage, std::string("unknown structural variable: ") + tag);
        return {VarKind::Structural, 0, 0, tag};
    }

    std::string name() const {
        switch (kind) {
            case VarKind::A: return "A" + std::to_string(i);
            case VarKind::C: return "C" + std::to_string(i) + "_" + std::to_string(j);
            case VarKind::Structural: return std::string(1, tag);
        }
        return "?";
    }

    /// Accepts A<k>, C<i>_<j>, and X/Y/T/z (structural also case-insensitively).
    static std::optional<VarDescriptor> parse(std::string_view s);

    auto operator<=>(const VarDescriptor&) const = default;
};

/// Ordered set of variable descriptors; the order is fixed at construction and
/// determines the canonical monomial ordering.
class VarRegistry {
public:
    using Ptr = std::shared_ptr<const VarRegistry>;

    static Ptr make(std::vector<VarDescriptor> vars) {
        auto reg = std::shared_ptr<VarRegistry>(new VarRegistry(std::move(vars)));
        return reg;
    }

    size_t size() const { return vars_.size(); }
    const VarDescriptor& var(size_t idx) const { return vars_.at(idx); }
    const std::vector<VarDescriptor>& vars() const { return vars_; }

    std::optional<size_t> index_of(const VarDescriptor& d) const {
        auto it = idx_.find(d);
        if (it == idx_.end()) return std::nullopt;
        return it->second;
    }

    std::optional<size_t> index_of_name(std::string_view name) const {
        auto d = VarDescriptor::parse(name);
        if (!d) return std::nullopt;
        return index_of(*d);
    }

private:
    explicit VarRegistry(std::vector<VarDescriptor> vars) : vars_(std::move(vars)) {
        for (size_t k = 0; k < vars_.size(); ++k) {
            if (!idx_.emplace(vars_[k], k).second)
                fail(Errc::usage, "duplicate variable in registry: " + vars_[k].name());
        }
    }

    std::vector<VarDescriptor> vars_;
    std::map<VarDescriptor, size_t> idx_;
};

inline std::optional<VarDescriptor> VarDescriptor::parse(std::string_view s) {
    if (s.empty()) return std::nullopt;
    if (s.size() == 1) {
        char c = s[0];
        if (c == 'x') c = 'X';
        if (c == 'y') c = 'Y';
        if (c == 't') c = 'T';
        if (c == 'Z') c = 'z';
        if (c == 'X' || c == 'Y' || c == 'T' || c == 'z') return structural(c);
        return std::nullopt;
    }
    auto digits = [](std::string_view d) -> std::optional<long> {
        if (d.empty()) return std::nullopt;
        long v = 0;
        for (char c : d) {
            if (c < '0' || c > '9') return std::nullopt;
            v = v * 10 + (c - '0');
        }
        return v;
    };
    if (s[0] == 'A' || s[0] == 'a') {
        auto i = digits(s.substr(1));
        if (!i) return std::nullopt;
        return A(*i);
    }
    if (s[0] == 'C' || s[0] == 'c') {
        auto rest = s.substr(1);
        auto us = rest.find('_');
        if (us == std::string_view::npos) return std::nullopt;
        auto i = digits(rest.substr(0, us));
        auto j = digits(rest.substr(us + 1));
        if (!i || !j) return std::nullopt;
        return C(*i, *j);
    }
    return std::nullopt;
}

/// Registry with the two structural variables of a bivariate ring, x first.
inline VarRegistry::Ptr make_xy_registry(char xtag, char ytag = 'Y') {
    return VarRegistry::make({VarDescriptor::structural(xtag), VarDescriptor::structural(ytag)});
}

} // namespace puiseux
