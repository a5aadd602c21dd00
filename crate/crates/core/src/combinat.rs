//! Small integer helpers shared by the table modules.

use num_bigint::BigInt;
use num_traits::One;

use crate::qseries::Coeff;

/// `C(n, k)` with the convention `C(n, k) = 0` for `k < 0` or `k > n`.
pub fn binomial(n: i64, k: i64) -> BigInt {
    binomial_in(n, k)
}

/// `C(n, k)` in any coefficient ring, by the multiplicative formula.
pub fn binomial_in<C: Coeff>(n: i64, k: i64) -> C {
    if n < 0 || k < 0 || k > n {
        return C::zero();
    }
    let k = k.min(n - k);
    let mut acc = C::one();
    for t in 0..k {
        acc = acc * C::from_i64(n - t).expect("fits") / C::from_i64(t + 1).expect("fits");
    }
    acc
}

pub fn pow2(e: u32) -> BigInt {
    BigInt::one() << e
}

/// Decimal-string serialization for arbitrary-precision integers.
pub mod bigint_str {
    use num_bigint::BigInt;
    use serde::{Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(v: &BigInt, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&v.to_string())
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<BigInt, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}
