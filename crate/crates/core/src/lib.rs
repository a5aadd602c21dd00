//! Exact combinatorics for the symmetric pair `(SL(2n+1), SO(2n+1))`:
//! nilpotent orbits, IC stalks of the order-two orbits, the type-C Springer
//! data they map to, and Betti numbers of Fano varieties of planes in
//! intersections of two quadrics.
//!
//! The polynomial machinery is generic over the coefficient ring; the
//! aliases below fix it to arbitrary-precision integers.

pub mod combinat;
pub mod error;
pub mod fano;
pub mod ic_engine;
pub mod partitions;
pub mod qseries;
pub mod springer_typec;
pub mod verify;

use num_bigint::BigInt;

pub use error::{Error, Result};
pub use partitions::{OrbitLabel, Partition};
pub use qseries::{Coeff, LaurentPoly};

pub type Poly = LaurentPoly<BigInt>;
pub type Stalks = ic_engine::StalkTable<BigInt>;
pub type Multiplicities = ic_engine::MultiplicityTable<BigInt>;
pub type Fano = fano::FanoCohomology<BigInt>;
