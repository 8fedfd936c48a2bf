use crate::error::{Error, Result};

/// Field orders supported by [`FiniteField::new`].
pub const SUPPORTED_ORDERS: [u32; 10] = [2, 3, 4, 5, 7, 8, 9, 11, 13, 16];

/// `(p, e, low coefficients of the monic modulus)` for each supported order.
/// Element `a` encodes `Σ a_i x^i` with base-`p` digits `a_i`.
fn field_shape(q: u32) -> Option<(u32, u32, &'static [u32])> {
    Some(match q {
        2 | 3 | 5 | 7 | 11 | 13 => (q, 1, &[]),
        // x² + x + 1
        4 => (2, 2, &[1, 1]),
        // x³ + x + 1
        8 => (2, 3, &[1, 1, 0]),
        // x² + 2x + 2
        9 => (3, 2, &[2, 2]),
        // x⁴ + x + 1
        16 => (2, 4, &[1, 1, 0, 0]),
        _ => return None,
    })
}

/// The finite field `F_q` as addition and multiplication tables over
/// `0..q`, with `0` and `1` the additive and multiplicative identities.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiniteField {
    q: u32,
    p: u32,
    add: Vec<u8>,
    mul: Vec<u8>,
    inv: Vec<u8>,
    primitive: u8,
}

fn digits(mut a: u32, p: u32, e: u32) -> Vec<u32> {
    (0..e)
        .map(|_| {
            let d = a % p;
            a /= p;
            d
        })
        .collect()
}

fn undigits(ds: &[u32], p: u32) -> u32 {
    ds.iter().rev().fold(0, |acc, &d| acc * p + d)
}

fn poly_mul(a: &[u32], b: &[u32], p: u32, modulus: &[u32]) -> Vec<u32> {
    let e = a.len();
    let mut prod = vec![0u32; 2 * e];
    for (i, &x) in a.iter().enumerate() {
        for (j, &y) in b.iter().enumerate() {
            prod[i + j] = (prod[i + j] + x * y) % p;
        }
    }
    // x^e ≡ −Σ modulus_i x^i
    for k in (e..2 * e).rev() {
        let c = prod[k];
        if c == 0 {
            continue;
        }
        prod[k] = 0;
        for (i, &mi) in modulus.iter().enumerate() {
            prod[k - e + i] = (prod[k - e + i] + (p - mi % p) * c) % p;
        }
    }
    prod.truncate(e);
    prod
}

impl FiniteField {
    pub fn new(q: u32) -> Result<Self> {
        let (p, e, modulus) = field_shape(q).ok_or(Error::UnsupportedField { q })?;
        let qs = q as usize;
        let mut add = vec![0u8; qs * qs];
        let mut mul = vec![0u8; qs * qs];
        for a in 0..q {
            let da = digits(a, p, e);
            for b in 0..q {
                let db = digits(b, p, e);
                let sum: Vec<u32> = da.iter().zip(&db).map(|(x, y)| (x + y) % p).collect();
                let idx = (a * q + b) as usize;
                add[idx] = undigits(&sum, p) as u8;
                mul[idx] = if e == 1 {
                    ((a * b) % p) as u8
                } else {
                    undigits(&poly_mul(&da, &db, p, modulus), p) as u8
                };
            }
        }
        let mut inv = vec![0u8; qs];
        for a in 1..qs {
            inv[a] = (1..qs)
                .find(|&b| mul[a * qs + b] == 1)
                .expect("nonzero elements are invertible") as u8;
        }
        let primitive = (1..q)
            .find(|&g| {
                let mut x = 1u8;
                (1..q).all(|k| {
                    x = mul[x as usize * qs + g as usize];
                    (x == 1) == (k == q - 1)
                })
            })
            .expect("multiplicative group is cyclic") as u8;
        let field = FiniteField { q, p, add, mul, inv, primitive };
        field.check_axioms();
        Ok(field)
    }

    pub fn order(&self) -> u32 {
        self.q
    }

    pub fn characteristic(&self) -> u32 {
        self.p
    }

    pub fn add(&self, a: u8, b: u8) -> u8 {
        self.add[a as usize * self.q as usize + b as usize]
    }

    pub fn mul(&self, a: u8, b: u8) -> u8 {
        self.mul[a as usize * self.q as usize + b as usize]
    }

    pub fn neg(&self, a: u8) -> u8 {
        (0..self.q as u8).find(|&b| self.add(a, b) == 0).expect("additive inverse")
    }

    /// Multiplicative inverse; `None` for zero.
    pub fn inv(&self, a: u8) -> Option<u8> {
        (a != 0).then(|| self.inv[a as usize])
    }

    /// A generator of the multiplicative group.
    pub fn primitive_element(&self) -> u8 {
        self.primitive
    }

    fn check_axioms(&self) {
        let q = self.q as u8;
        let all = || 0..q;
        for a in all() {
            assert_eq!(self.add(a, 0), a);
            assert_eq!(self.mul(a, 1), a);
            assert_eq!(self.mul(a, 0), 0);
            if a != 0 {
                assert_eq!(self.mul(a, self.inv[a as usize]), 1);
            }
            for b in all() {
                assert_eq!(self.add(a, b), self.add(b, a));
                assert_eq!(self.mul(a, b), self.mul(b, a));
                for c in all() {
                    assert_eq!(self.add(self.add(a, b), c), self.add(a, self.add(b, c)));
                    assert_eq!(self.mul(self.mul(a, b), c), self.mul(a, self.mul(b, c)));
                    assert_eq!(self.mul(a, self.add(b, c)), self.add(self.mul(a, b), self.mul(a, c)));
                }
            }
        }
        // additive inverses and no zero divisors
        for a in all() {
            assert!(all().any(|b| self.add(a, b) == 0));
            for b in 1..q {
                if a != 0 {
                    assert_ne!(self.mul(a, b), 0);
                }
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn all_supported_orders_build() {
        for q in SUPPORTED_ORDERS {
            let f = FiniteField::new(q).unwrap();
            assert_eq!(f.order(), q);
            let g = f.primitive_element();
            let mut seen = std::collections::HashSet::new();
            let mut x = 1u8;
            for _ in 0..q - 1 {
                x = f.mul(x, g);
                seen.insert(x);
            }
            assert_eq!(seen.len() as u32, q - 1);
        }
    }

    #[test]
    fn unsupported_orders() {
        for q in [0, 1, 6, 10, 12, 17, 25] {
            assert_eq!(FiniteField::new(q), Err(Error::UnsupportedField { q }));
        }
    }

    #[test]
    fn f4_tables() {
        let f = FiniteField::new(4).unwrap();
        // x · x = x + 1
        assert_eq!(f.mul(2, 2), 3);
        assert_eq!(f.add(2, 3), 1);
        assert_eq!(f.characteristic(), 2);
        assert_eq!(f.neg(3), 3);
    }

    #[test]
    fn prime_fields_are_modular() {
        let f = FiniteField::new(7).unwrap();
        assert_eq!(f.mul(3, 5), 1);
        assert_eq!(f.add(4, 5), 2);
        assert_eq!(f.inv(3), Some(5));
        assert_eq!(f.inv(0), None);
        assert_eq!(f.neg(2), 5);
    }
}
