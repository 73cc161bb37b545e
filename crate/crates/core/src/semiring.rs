//! Idempotent semirings and their scalar elements.
//!
//! A semiring here is a carrier set with two operations (⊕, ⊙) such that
//! ⊕ is associative, commutative, and idempotent (a⊕a = a) with neutral
//! element φ; ⊙ is associative with two-sided identity e, distributes
//! over ⊕ from both sides, and is annihilated by φ. The scalar star
//! a* = e ⊕ a ⊕ a² ⊕ … solves the fixed-point equation y = a⊙y ⊕ b
//! (as y = a*⊙b) whenever the series stabilizes.
//!
//! Five instances are provided:
//!
//! | name     | carrier          | ⊕   | ⊙   | φ     | e    |
//! |----------|------------------|-----|-----|-------|------|
//! | maxplus  | ℤ ∪ {−∞}         | max | +   | −∞    | 0    |
//! | minplus  | ℤ ∪ {+∞}         | min | +   | +∞    | 0    |
//! | boolean  | {false, true}    | or  | and | false | true |
//! | maxmin   | ℤ ∪ {−∞, +∞}     | max | min | −∞    | +∞   |
//! | maxtimes | [0, 1] ∪ {0}     | max | ×   | 0     | 1    |
//!
//! Integer carriers are exact; max-times uses `f64` with equality at
//! absolute tolerance 1e-12. φ is always the dedicated
//! [`ExtendedScalar::Phi`] tag rather than a sentinel number, so the
//! annihilation law holds even where a sentinel would overflow.

use crate::error::Error;
use std::fmt;
use std::str::FromStr;

/// A carrier value extended with the distinguished semiring zero φ.
///
/// φ carries no value; two φ values compare equal. Finite values keep
/// the carrier's native representation and comparison semantics.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ExtendedScalar<T> {
    /// The semiring zero: neutral for ⊕, annihilating for ⊙.
    Phi,
    /// An ordinary carrier value.
    Finite(T),
}

pub use ExtendedScalar::{Finite, Phi};

impl<T> ExtendedScalar<T> {
    pub fn is_phi(&self) -> bool {
        matches!(self, Phi)
    }

    pub fn as_finite(&self) -> Option<&T> {
        match self {
            Phi => None,
            Finite(v) => Some(v),
        }
    }

    pub fn into_finite(self) -> Option<T> {
        match self {
            Phi => None,
            Finite(v) => Some(v),
        }
    }
}

/// Shorthand for the element type of a semiring.
pub type Elem<S> = ExtendedScalar<<S as Semiring>::Value>;

/// A decimal weight literal, as read from a graph file, before it is
/// checked against a particular carrier.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum RawWeight {
    Int(i64),
    Real(f64),
}

impl fmt::Display for RawWeight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RawWeight::Int(v) => write!(f, "{v}"),
            RawWeight::Real(v) => write!(f, "{v}"),
        }
    }
}

/// The algebra contract: carrier, ⊕, ⊙, φ, e, and scalar star.
///
/// Implementations are zero-sized markers; all values are immutable and
/// every operation is a pure function, so everything here is safe to
/// share and call concurrently.
pub trait Semiring: Copy + Default + PartialEq + fmt::Debug + Send + Sync {
    /// The finite part of the carrier.
    type Value: Copy + PartialEq + fmt::Debug + Send + Sync;

    /// Name used to select the semiring from the command line.
    const NAME: &'static str;

    /// The zero element φ: neutral for ⊕, annihilating for ⊙.
    fn zero(&self) -> Elem<Self> {
        Phi
    }

    /// The unit element e: two-sided identity for ⊙.
    fn one(&self) -> Elem<Self>;

    /// Semiring sum a ⊕ b. Total: never leaves the carrier.
    fn oplus(&self, a: Elem<Self>, b: Elem<Self>) -> Elem<Self>;

    /// Semiring product a ⊙ b. Finite-domain overflow is an error, not
    /// a wrap.
    fn odot(&self, a: Elem<Self>, b: Elem<Self>) -> Result<Elem<Self>, Error>;

    /// Scalar star a* = e ⊕ a ⊕ a² ⊕ …, or `Error::Divergence` when the
    /// series does not stabilize.
    fn star(&self, a: Elem<Self>) -> Result<Elem<Self>, Error>;

    /// Element equality: exact for integer carriers, absolute tolerance
    /// [`REAL_EQ_TOLERANCE`] for real carriers.
    fn elem_eq(&self, a: &Elem<Self>, b: &Elem<Self>) -> bool {
        a == b
    }

    /// Whether `a` lies in this semiring's carrier.
    fn contains(&self, a: &Elem<Self>) -> bool {
        let _ = a;
        true
    }

    /// Render a finite carrier value for the matrix text format.
    fn format_value(&self, v: &Self::Value) -> String;

    /// Parse a finite carrier value from a matrix text token; `None` if
    /// the token is not a literal of this carrier.
    fn parse_value(&self, token: &str) -> Option<Self::Value>;

    /// Check a raw decimal weight against the carrier and convert it.
    fn element_from_weight(&self, w: RawWeight) -> Result<Elem<Self>, Error>;
}

/// Absolute tolerance for equality over real carriers.
pub const REAL_EQ_TOLERANCE: f64 = 1e-12;

fn weight_out_of_domain<S: Semiring>(w: RawWeight) -> Error {
    Error::WeightOutOfDomain {
        semiring: S::NAME,
        weight: w.to_string(),
    }
}

/// Max-plus: ⊕ = max, ⊙ = +, φ = −∞, e = 0 over exact integers.
#[derive(Debug, Default, Clone, Copy, PartialEq, Eq)]
pub struct MaxPlus;

impl Semiring for MaxPlus {
    type Value = i64;
    const NAME: &'static str = "maxplus";

    fn one(&self) -> Elem<Self> {
        Finite(0)
    }

    fn oplus(&self, a: Elem<Self>, b: Elem<Self>) -> Elem<Self> {
        match (a, b) {
            (Phi, x) | (x, Phi) => x,
            (Finite(a), Finite(b)) => Finite(a.max(b)),
        }
    }

    fn odot(&self, a: Elem<Self>, b: Elem<Self>) -> Result<Elem<Self>, Error> {
        match (a, b) {
            (Phi, _) | (_, Phi) => Ok(Phi),
            (Finite(a), Finite(b)) => a.checked_add(b).map(Finite).ok_or(Error::Overflow),
        }
    }

    fn star(&self, a: Elem<Self>) -> Result<Elem<Self>, Error> {
        // Closed form: the series collapses to e exactly when a ⊑ e,
        // i.e. a ≤ 0 or a = φ; positive a grows without bound.
        match a {
            Phi => Ok(self.one()),
            Finite(v) if v <= 0 => Ok(self.one()),
            Finite(_) => Err(Error::Divergence),
        }
    }

    fn format_value(&self, v: &i64) -> String {
        v.to_string()
    }

    fn parse_value(&self, token: &str) -> Option<i64> {
        token.parse().ok()
    }

    fn element_from_weight(&self, w: RawWeight) -> Result<Elem<Self>, Error> {
        match w {
            RawWeight::Int(v) => Ok(Finite(v)),
            RawWeight::Real(_) => Err(weight_out_of_domain::<Self>(w)),
        }
    }
}

/// Min-plus: ⊕ = min, ⊙ = +, φ = +∞, e = 0 over exact integers.
/// The shortest-path semiring.
#[derive(Debug, Default, Clone, Copy, PartialEq, Eq)]
pub struct MinPlus;

impl Semiring for MinPlus {
    type Value = i64;
    const NAME: &'static str = "minplus";

    fn one(&self) -> Elem<Self> {
        Finite(0)
    }

    fn oplus(&self, a: Elem<Self>, b: Elem<Self>) -> Elem<Self> {
        match (a, b) {
            (Phi, x) | (x, Phi) => x,
            (Finite(a), Finite(b)) => Finite(a.min(b)),
        }
    }

    fn odot(&self, a: Elem<Self>, b: Elem<Self>) -> Result<Elem<Self>, Error> {
        match (a, b) {
            (Phi, _) | (_, Phi) => Ok(Phi),
            (Finite(a), Finite(b)) => a.checked_add(b).map(Finite).ok_or(Error::Overflow),
        }
    }

    fn star(&self, a: Elem<Self>) -> Result<Elem<Self>, Error> {
        // Nonnegative a cannot improve on the empty path; negative a
        // descends forever.
        match a {
            Phi => Ok(self.one()),
            Finite(v) if v >= 0 => Ok(self.one()),
            Finite(_) => Err(Error::Divergence),
        }
    }

    fn format_value(&self, v: &i64) -> String {
        v.to_string()
    }

    fn parse_value(&self, token: &str) -> Option<i64> {
        token.parse().ok()
    }

    fn element_from_weight(&self, w: RawWeight) -> Result<Elem<Self>, Error> {
        match w {
            RawWeight::Int(v) => Ok(Finite(v)),
            RawWeight::Real(_) => Err(weight_out_of_domain::<Self>(w)),
        }
    }
}

/// Boolean: ⊕ = or, ⊙ = and, φ = false, e = true.
/// The reachability semiring.
///
/// The carrier has exactly two elements: φ plays false and `Finite(true)`
/// plays true. `Finite(false)` is not a carrier element; operations
/// normalize it away so the algebra laws hold on everything they return.
#[derive(Debug, Default, Clone, Copy, PartialEq, Eq)]
pub struct Boolean;

impl Boolean {
    fn truth(a: Elem<Self>) -> bool {
        matches!(a, Finite(true))
    }

    fn from_truth(b: bool) -> Elem<Self> {
        if b {
            Finite(true)
        } else {
            Phi
        }
    }
}

impl Semiring for Boolean {
    type Value = bool;
    const NAME: &'static str = "boolean";

    fn one(&self) -> Elem<Self> {
        Finite(true)
    }

    fn oplus(&self, a: Elem<Self>, b: Elem<Self>) -> Elem<Self> {
        Self::from_truth(Self::truth(a) || Self::truth(b))
    }

    fn odot(&self, a: Elem<Self>, b: Elem<Self>) -> Result<Elem<Self>, Error> {
        Ok(Self::from_truth(Self::truth(a) && Self::truth(b)))
    }

    fn star(&self, _a: Elem<Self>) -> Result<Elem<Self>, Error> {
        // e is the top of the carrier, so e ⊕ a⁺ = e for any a.
        Ok(self.one())
    }

    fn contains(&self, a: &Elem<Self>) -> bool {
        !matches!(a, Finite(false))
    }

    fn format_value(&self, v: &bool) -> String {
        if *v { "1" } else { "0" }.to_string()
    }

    fn parse_value(&self, token: &str) -> Option<bool> {
        match token {
            "1" | "true" => Some(true),
            _ => None,
        }
    }

    fn element_from_weight(&self, w: RawWeight) -> Result<Elem<Self>, Error> {
        match w {
            RawWeight::Int(1) => Ok(Finite(true)),
            RawWeight::Int(0) => Ok(Phi),
            _ => Err(weight_out_of_domain::<Self>(w)),
        }
    }
}

/// Max-min: ⊕ = max, ⊙ = min, φ = −∞, e = +∞ over exact integers.
/// The capacity (widest-bottleneck) semiring.
///
/// e = +∞ is represented as `Finite(i64::MAX)`; min never creates new
/// values, so the representation is exact.
#[derive(Debug, Default, Clone, Copy, PartialEq, Eq)]
pub struct MaxMin;

impl Semiring for MaxMin {
    type Value = i64;
    const NAME: &'static str = "maxmin";

    fn one(&self) -> Elem<Self> {
        Finite(i64::MAX)
    }

    fn oplus(&self, a: Elem<Self>, b: Elem<Self>) -> Elem<Self> {
        match (a, b) {
            (Phi, x) | (x, Phi) => x,
            (Finite(a), Finite(b)) => Finite(a.max(b)),
        }
    }

    fn odot(&self, a: Elem<Self>, b: Elem<Self>) -> Result<Elem<Self>, Error> {
        match (a, b) {
            (Phi, _) | (_, Phi) => Ok(Phi),
            (Finite(a), Finite(b)) => Ok(Finite(a.min(b))),
        }
    }

    fn star(&self, _a: Elem<Self>) -> Result<Elem<Self>, Error> {
        // e is the top of the carrier under ⊕ = max, so a* = e always.
        Ok(self.one())
    }

    fn format_value(&self, v: &i64) -> String {
        v.to_string()
    }

    fn parse_value(&self, token: &str) -> Option<i64> {
        token.parse().ok()
    }

    fn element_from_weight(&self, w: RawWeight) -> Result<Elem<Self>, Error> {
        match w {
            RawWeight::Int(v) => Ok(Finite(v)),
            RawWeight::Real(_) => Err(weight_out_of_domain::<Self>(w)),
        }
    }
}

/// Max-times: ⊕ = max, ⊙ = ×, φ = 0, e = 1 over reals in [0, 1].
/// The reliability (most-probable-path) semiring.
#[derive(Debug, Default, Clone, Copy, PartialEq)]
pub struct MaxTimes;

impl Semiring for MaxTimes {
    type Value = f64;
    const NAME: &'static str = "maxtimes";

    fn one(&self) -> Elem<Self> {
        Finite(1.0)
    }

    fn oplus(&self, a: Elem<Self>, b: Elem<Self>) -> Elem<Self> {
        match (a, b) {
            (Phi, x) | (x, Phi) => x,
            (Finite(a), Finite(b)) => Finite(a.max(b)),
        }
    }

    fn odot(&self, a: Elem<Self>, b: Elem<Self>) -> Result<Elem<Self>, Error> {
        match (a, b) {
            (Phi, _) | (_, Phi) => Ok(Phi),
            (Finite(a), Finite(b)) => {
                let p = a * b;
                if p.is_finite() {
                    Ok(Finite(p))
                } else {
                    Err(Error::Overflow)
                }
            }
        }
    }

    fn star(&self, a: Elem<Self>) -> Result<Elem<Self>, Error> {
        // Iterate the partial folds e ⊕ a ⊕ … ⊕ a^k to a fixed point;
        // give up after 64 steps.
        let mut sum = self.one();
        let mut power = self.one();
        for _ in 0..64 {
            power = self.odot(power, a)?;
            let next = self.oplus(sum, power);
            if self.elem_eq(&next, &sum) {
                return Ok(sum);
            }
            sum = next;
        }
        Err(Error::Divergence)
    }

    fn elem_eq(&self, a: &Elem<Self>, b: &Elem<Self>) -> bool {
        match (a, b) {
            (Phi, Phi) => true,
            (Finite(a), Finite(b)) => (a - b).abs() <= REAL_EQ_TOLERANCE,
            _ => false,
        }
    }

    fn contains(&self, a: &Elem<Self>) -> bool {
        match a {
            Phi => true,
            Finite(v) => (0.0..=1.0).contains(v),
        }
    }

    fn format_value(&self, v: &f64) -> String {
        v.to_string()
    }

    fn parse_value(&self, token: &str) -> Option<f64> {
        token.parse().ok()
    }

    fn element_from_weight(&self, w: RawWeight) -> Result<Elem<Self>, Error> {
        let v = match w {
            RawWeight::Int(v) => v as f64,
            RawWeight::Real(v) => v,
        };
        if !(0.0..=1.0).contains(&v) {
            return Err(weight_out_of_domain::<Self>(w));
        }
        // The numeric 0 is φ in this carrier.
        if v == 0.0 {
            Ok(Phi)
        } else {
            Ok(Finite(v))
        }
    }
}

/// Runtime selector for the five provided semirings.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SemiringKind {
    MaxPlus,
    MinPlus,
    Boolean,
    MaxMin,
    MaxTimes,
}

impl SemiringKind {
    pub const ALL: [SemiringKind; 5] = [
        SemiringKind::MaxPlus,
        SemiringKind::MinPlus,
        SemiringKind::Boolean,
        SemiringKind::MaxMin,
        SemiringKind::MaxTimes,
    ];

    pub fn name(&self) -> &'static str {
        match self {
            SemiringKind::MaxPlus => MaxPlus::NAME,
            SemiringKind::MinPlus => MinPlus::NAME,
            SemiringKind::Boolean => Boolean::NAME,
            SemiringKind::MaxMin => MaxMin::NAME,
            SemiringKind::MaxTimes => MaxTimes::NAME,
        }
    }
}

impl fmt::Display for SemiringKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for SemiringKind {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "maxplus" => Ok(SemiringKind::MaxPlus),
            "minplus" => Ok(SemiringKind::MinPlus),
            "boolean" => Ok(SemiringKind::Boolean),
            "maxmin" => Ok(SemiringKind::MaxMin),
            "maxtimes" => Ok(SemiringKind::MaxTimes),
            other => Err(format!(
                "unknown semiring `{other}`; expected one of maxplus, minplus, boolean, maxmin, maxtimes"
            )),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn maxplus_oplus_examples() {
        let s = MaxPlus;
        assert_eq!(s.oplus(Finite(2), Finite(5)), Finite(5));
        assert_eq!(s.oplus(Finite(3), Phi), Finite(3));
        assert_eq!(s.oplus(Phi, Finite(3)), Finite(3));
        assert_eq!(s.oplus(Finite(7), Finite(7)), Finite(7));
        assert_eq!(s.oplus(Phi, Phi), Elem::<MaxPlus>::Phi);
    }

    #[test]
    fn maxplus_odot_examples() {
        let s = MaxPlus;
        assert_eq!(s.odot(Finite(2), Finite(5)).unwrap(), Finite(7));
        assert_eq!(s.odot(Finite(3), Phi).unwrap(), Phi);
        assert_eq!(s.odot(Phi, Finite(3)).unwrap(), Phi);
        assert_eq!(s.odot(s.one(), Finite(4)).unwrap(), Finite(4));
        assert_eq!(s.odot(Finite(4), s.one()).unwrap(), Finite(4));
    }

    #[test]
    fn maxplus_odot_overflow_is_an_error() {
        let s = MaxPlus;
        assert_eq!(s.odot(Finite(i64::MAX), Finite(1)), Err(Error::Overflow));
        assert_eq!(s.odot(Finite(i64::MIN), Finite(-1)), Err(Error::Overflow));
        // φ still annihilates values that would overflow a sentinel.
        assert_eq!(s.odot(Phi, Finite(i64::MIN)).unwrap(), Phi);
    }

    /// Star oracle: fold the partial sums e ⊕ a ⊕ a² ⊕ … until they
    /// stop changing, independent of the closed-form implementation.
    fn star_by_folding(a: Elem<MaxPlus>) -> Option<Elem<MaxPlus>> {
        let s = MaxPlus;
        let mut sum = s.one();
        let mut power = s.one();
        for _ in 0..64 {
            power = s.odot(power, a).ok()?;
            let next = s.oplus(sum, power);
            if next == sum {
                return Some(sum);
            }
            sum = next;
        }
        None
    }

    #[test]
    fn maxplus_star_matches_folding_oracle() {
        let s = MaxPlus;
        assert_eq!(s.star(Phi).unwrap(), Finite(0));
        assert_eq!(star_by_folding(Phi), Some(Finite(0)));

        // max(0, -3, -6, …) stabilizes at 0.
        assert_eq!(s.star(Finite(-3)).unwrap(), Finite(0));
        assert_eq!(star_by_folding(Finite(-3)), Some(Finite(0)));

        assert_eq!(s.star(Finite(2)), Err(Error::Divergence));
        assert_eq!(star_by_folding(Finite(2)), None);

        for v in [-100, -1, 0] {
            assert_eq!(s.star(Finite(v)).unwrap(), star_by_folding(Finite(v)).unwrap());
        }
    }

    #[test]
    fn minplus_basics() {
        let s = MinPlus;
        assert_eq!(s.oplus(Finite(2), Finite(5)), Finite(2));
        assert_eq!(s.oplus(Phi, Finite(5)), Finite(5));
        assert_eq!(s.odot(Finite(2), Finite(5)).unwrap(), Finite(7));
        assert_eq!(s.star(Finite(3)).unwrap(), Finite(0));
        assert_eq!(s.star(Finite(-1)), Err(Error::Divergence));
    }

    #[test]
    fn boolean_basics() {
        let s = Boolean;
        assert_eq!(s.oplus(Phi, Finite(true)), Finite(true));
        assert_eq!(s.odot(Finite(true), Phi).unwrap(), Phi);
        assert_eq!(s.odot(Finite(true), Finite(true)).unwrap(), Finite(true));
        assert_eq!(s.star(Phi).unwrap(), Finite(true));
        // Finite(false) is outside the carrier and normalizes away.
        assert!(!s.contains(&Finite(false)));
        assert_eq!(s.oplus(Finite(false), Phi), Phi);
    }

    #[test]
    fn maxmin_basics() {
        let s = MaxMin;
        assert_eq!(s.oplus(Finite(3), Finite(7)), Finite(7));
        assert_eq!(s.odot(Finite(3), Finite(7)).unwrap(), Finite(3));
        assert_eq!(s.odot(s.one(), Finite(42)).unwrap(), Finite(42));
        assert_eq!(s.star(Finite(9)).unwrap(), s.one());
        assert_eq!(s.star(Phi).unwrap(), s.one());
    }

    #[test]
    fn maxtimes_basics() {
        let s = MaxTimes;
        assert_eq!(s.oplus(Finite(0.3), Finite(0.7)), Finite(0.7));
        assert_eq!(s.odot(Finite(0.5), Finite(0.5)).unwrap(), Finite(0.25));
        assert_eq!(s.odot(Finite(0.5), s.one()).unwrap(), Finite(0.5));
        assert!(s.star(Finite(0.9)).is_ok());
        assert_eq!(s.star(Finite(0.9)).unwrap(), Finite(1.0));
        // Outside the carrier the partial folds keep growing.
        assert_eq!(s.star(Finite(1.5)), Err(Error::Divergence));
        assert!(s.contains(&Finite(1.0)));
        assert!(!s.contains(&Finite(1.5)));
    }

    #[test]
    fn star_satisfies_fixed_point_when_it_returns() {
        // star(a) = e ⊕ a ⊙ star(a)
        let s = MaxPlus;
        for v in [Phi, Finite(-5), Finite(0), Finite(-1)] {
            let st = s.star(v).unwrap();
            let rhs = s.oplus(s.one(), s.odot(v, st).unwrap());
            assert_eq!(st, rhs);
        }
        let t = MaxTimes;
        for v in [Phi, Finite(0.0), Finite(0.5), Finite(1.0)] {
            let st = t.star(v).unwrap();
            let rhs = t.oplus(t.one(), t.odot(v, st).unwrap());
            assert!(t.elem_eq(&st, &rhs));
        }
    }

    #[test]
    fn weight_conversion_checks_the_carrier() {
        assert_eq!(
            MaxPlus.element_from_weight(RawWeight::Int(5)).unwrap(),
            Finite(5)
        );
        assert!(matches!(
            MaxPlus.element_from_weight(RawWeight::Real(0.5)),
            Err(Error::WeightOutOfDomain { .. })
        ));
        assert_eq!(
            Boolean.element_from_weight(RawWeight::Int(0)).unwrap(),
            Phi
        );
        assert!(matches!(
            Boolean.element_from_weight(RawWeight::Int(2)),
            Err(Error::WeightOutOfDomain { .. })
        ));
        assert_eq!(
            MaxTimes.element_from_weight(RawWeight::Real(0.25)).unwrap(),
            Finite(0.25)
        );
        assert_eq!(
            MaxTimes.element_from_weight(RawWeight::Real(0.0)).unwrap(),
            Phi
        );
        assert!(matches!(
            MaxTimes.element_from_weight(RawWeight::Real(1.5)),
            Err(Error::WeightOutOfDomain { .. })
        ));
    }

    #[test]
    fn semiring_kind_round_trips_names() {
        for kind in SemiringKind::ALL {
            assert_eq!(kind.name().parse::<SemiringKind>().unwrap(), kind);
        }
        assert!("euclidean".parse::<SemiringKind>().is_err());
    }
}
