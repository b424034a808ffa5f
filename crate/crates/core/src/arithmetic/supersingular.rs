//! The congruence `p^nu = -1 (mod m)` for Delsarte-type surfaces.

use super::field::is_prime;
use crate::cyclotomic::gcd;
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct CongruenceWitness {
    pub supersingular: bool,
    /// Smallest `nu >= 1` with `p^nu = -1 (mod m)`.
    pub nu: Option<u32>,
    /// Multiplicative order of `p` modulo `m`.
    pub order: u32,
}

pub fn supersingular_congruence_test(p: u64, m: u64) -> Result<CongruenceWitness> {
    if !is_prime(p) {
        return Err(Error::InvalidArgument(format!("{p} is not prime")));
    }
    if m < 2 {
        return Err(Error::InvalidArgument(format!("modulus {m} < 2")));
    }
    if gcd(p, m) != 1 {
        return Err(Error::InvalidArgument(format!("{p} divides {m}")));
    }
    let mut x = 1u64;
    let mut nu = None;
    for k in 1u32.. {
        x = x * (p % m) % m;
        if x == m - 1 && nu.is_none() {
            nu = Some(k);
        }
        if x == 1 {
            return Ok(CongruenceWitness {
                supersingular: nu.is_some(),
                nu,
                order: k,
            });
        }
    }
    unreachable!("p is a unit modulo m")
}
