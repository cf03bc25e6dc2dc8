#pragma once

#include "cspp/weight.hpp"

#include <span>
#include <string>

namespace cspp {

enum class Ordering : std::uint8_t { Less, Equal, Greater };
enum class Direction : std::uint8_t { Ascending, Descending };

/// A pointed, totally ordered weight domain.
///
/// In an ascending domain x ⊑ y means x <= y numerically; in a descending
/// domain it means x >= y. Top is the ⊑-greatest element, so it is the
/// numeric minimum of a descending carrier.
class WeightDomain {
public:
    enum class Carrier : std::uint8_t { ZeroInf, NatInf, RealSigned, RealNonneg, Unit };

    static WeightDomain zero_inf();
    static WeightDomain nat_inf_ascending();
    static WeightDomain nat_inf_descending();
    static WeightDomain real_signed();
    static WeightDomain real_nonneg_ascending(WeightValue xi = WeightValue::exact(0));
    static WeightDomain real_nonneg_descending();
    static WeightDomain unit_descending();

    [[nodiscard]] const std::string& id() const { return id_; }
    [[nodiscard]] Carrier carrier() const { return carrier_; }
    [[nodiscard]] Direction direction() const { return dir_; }
    [[nodiscard]] bool ascending() const { return dir_ == Direction::Ascending; }
    [[nodiscard]] NumericMode mode() const { return mode_; }
    [[nodiscard]] const WeightValue& top() const { return top_; }
    [[nodiscard]] const WeightValue& bottom() const { return bottom_; }
    [[nodiscard]] const WeightValue& xi() const { return xi_; }

    /// Same domain with values held in `mode`; xi is converted accordingly.
    [[nodiscard]] WeightDomain with_mode(NumericMode mode) const;

    [[nodiscard]] bool contains(const WeightValue& v) const;
    /// Throws CarrierViolation when `v` is outside the carrier.
    const WeightValue& require(const WeightValue& v) const;
    /// Converts to this domain's numeric mode and checks membership.
    [[nodiscard]] WeightValue coerce(const WeightValue& v) const;
    [[nodiscard]] WeightValue parse(std::string_view text) const;

    /// Checked total order under ⊑.
    [[nodiscard]] Ordering compare(const WeightValue& a, const WeightValue& b) const;

    // Unchecked fast paths used by the solvers.
    [[nodiscard]] int cmp(const WeightValue& a, const WeightValue& b) const
    {
        const int c = WeightValue::numeric_cmp(a, b);
        return ascending() ? c : -c;
    }
    [[nodiscard]] bool leq(const WeightValue& a, const WeightValue& b) const { return cmp(a, b) <= 0; }
    [[nodiscard]] bool less(const WeightValue& a, const WeightValue& b) const { return cmp(a, b) < 0; }
    [[nodiscard]] const WeightValue& meet(const WeightValue& a, const WeightValue& b) const { return leq(a, b) ? a : b; }
    [[nodiscard]] const WeightValue& join(const WeightValue& a, const WeightValue& b) const { return leq(a, b) ? b : a; }
    [[nodiscard]] bool is_top(const WeightValue& v) const { return v == top_; }

    /// ⊑-minimum of the values; top for an empty range. Checks the carrier.
    [[nodiscard]] WeightValue meet(std::span<const WeightValue> values) const;
    [[nodiscard]] WeightValue join(std::span<const WeightValue> values) const;

    /// Numeric distance used for float tolerances; 0 for equal values and
    /// infinity when exactly one side is infinite.
    [[nodiscard]] static double distance(const WeightValue& a, const WeightValue& b);

private:
    WeightDomain(std::string id, Carrier carrier, Direction dir, WeightValue top, WeightValue bottom, WeightValue xi);

    std::string id_;
    Carrier carrier_;
    Direction dir_;
    NumericMode mode_ = NumericMode::Exact;
    WeightValue top_;
    WeightValue bottom_;
    WeightValue xi_;
};

} // namespace cspp
