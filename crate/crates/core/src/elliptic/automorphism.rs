use crate::arithmetic::field::is_prime;
use crate::error::{Error, Result};

/// Largest order of an automorphism of an elliptic curve fixing a point.
pub fn ec_automorphism_bound(characteristic: u64) -> Result<u64> {
    match characteristic {
        0 => Ok(6),
        2 => Ok(24),
        3 => Ok(12),
        p if is_prime(p) => Ok(6),
        p => Err(Error::InvalidArgument(format!("{p} is not a characteristic"))),
    }
}
