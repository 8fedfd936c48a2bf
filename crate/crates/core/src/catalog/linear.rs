use num_bigint::BigUint;
use num_traits::Pow;

use super::{FiniteField, LabeledDomain};
use crate::bounds::affine_group_order;
use crate::error::{Error, Result};
use crate::group::{generate_group, FiniteGroup, DEFAULT_ELEMENT_CAP};
use crate::perm::Permutation;

/// Largest `q^d` accepted for a vector space domain.
pub const MAX_SPACE_SIZE: u64 = 1 << 20;

/// `F_q^d` with vectors indexed by `Σ v_i q^i`.
#[derive(Clone, Debug)]
pub struct VectorSpace {
    field: FiniteField,
    d: usize,
    size: usize,
}

/// A `d × d` matrix over `F_q`, row-major.
pub type Matrix = Vec<u8>;

impl VectorSpace {
    pub fn new(d: u32, q: u32) -> Result<Self> {
        let field = FiniteField::new(q)?;
        if d == 0 {
            return Err(Error::InvalidArgument("dimension must be at least 1".into()));
        }
        let size = u64::from(q)
            .checked_pow(d)
            .filter(|&s| s <= MAX_SPACE_SIZE)
            .ok_or_else(|| Error::CarrierTooLarge {
                size: Pow::pow(BigUint::from(q), d).to_string(),
                cap: MAX_SPACE_SIZE,
            })?;
        Ok(VectorSpace { field, d: d as usize, size: size as usize })
    }

    pub fn field(&self) -> &FiniteField {
        &self.field
    }

    pub fn dimension(&self) -> usize {
        self.d
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn vector(&self, mut index: usize) -> Vec<u8> {
        let q = self.field.order() as usize;
        (0..self.d)
            .map(|_| {
                let c = index % q;
                index /= q;
                c as u8
            })
            .collect()
    }

    pub fn index(&self, v: &[u8]) -> usize {
        let q = self.field.order() as usize;
        v.iter().rev().fold(0, |acc, &c| acc * q + c as usize)
    }

    pub fn identity_matrix(&self) -> Matrix {
        (0..self.d * self.d).map(|k| u8::from(k / self.d == k % self.d)).collect()
    }

    fn apply(&self, a: &[u8], t: &[u8], v: &[u8]) -> Vec<u8> {
        let f = &self.field;
        (0..self.d)
            .map(|i| {
                let row = &a[i * self.d..(i + 1) * self.d];
                row.iter().zip(v).fold(t[i], |acc, (&x, &y)| f.add(acc, f.mul(x, y)))
            })
            .collect()
    }

    /// The permutation `v ↦ A v + t` of the vector indices. `A` must be
    /// invertible.
    pub fn affine_permutation(&self, a: &[u8], t: &[u8]) -> Result<Permutation> {
        if a.len() != self.d * self.d || t.len() != self.d {
            return Err(Error::InvalidArgument("matrix or translation has the wrong shape".into()));
        }
        let image = (0..self.size)
            .map(|i| self.index(&self.apply(a, t, &self.vector(i))) as u32)
            .collect();
        Permutation::from_images(image)
    }

    pub fn linear_permutation(&self, a: &[u8]) -> Result<Permutation> {
        self.affine_permutation(a, &vec![0; self.d])
    }

    /// Labels such as `(1,0)`, coordinate 0 first.
    pub fn domain(&self) -> LabeledDomain {
        let labels = (0..self.size)
            .map(|i| {
                let parts: Vec<String> = self.vector(i).iter().map(u8::to_string).collect();
                format!("({})", parts.join(","))
            })
            .collect();
        LabeledDomain::new(labels).expect("vectors are distinct")
    }

    /// Generating matrices of `GL(d, q)`: `diag(ω, 1, …, 1)`, and for
    /// `d ≥ 2` the transvection `I + E_{01}`, the swap of the first two
    /// coordinates and the cyclic shift of all coordinates.
    pub fn gl_generator_matrices(&self) -> Vec<Matrix> {
        let d = self.d;
        let id = self.identity_matrix();
        let mut scale = id.clone();
        scale[0] = self.field.primitive_element();
        let mut out = vec![scale];
        if d >= 2 {
            let mut transvection = id.clone();
            transvection[1] = 1;
            let permutation = |sigma: &dyn Fn(usize) -> usize| {
                let mut m = vec![0u8; d * d];
                for j in 0..d {
                    m[sigma(j) * d + j] = 1;
                }
                m
            };
            let swap = permutation(&|j| match j {
                0 => 1,
                1 => 0,
                _ => j,
            });
            let shift = permutation(&|j| (j + 1) % d);
            out.push(transvection);
            out.push(swap);
            if d >= 3 {
                out.push(shift);
            }
        }
        out
    }
}

/// `|GL(d, q)| = ∏_{j<d} (q^d − q^j)`.
pub fn general_linear_order(d: u32, q: u32) -> Result<BigUint> {
    let qd: BigUint = Pow::pow(BigUint::from(q), d);
    Ok(affine_group_order(d, q)? / qd)
}

fn linear_group(d: u32, q: u32, affine: bool, cap: usize) -> Result<(FiniteGroup, VectorSpace)> {
    let space = VectorSpace::new(d, q)?;
    let mut gens = space
        .gl_generator_matrices()
        .iter()
        .map(|a| space.linear_permutation(a))
        .collect::<Result<Vec<_>>>()?;
    gens.retain(|g| !g.is_identity());
    if affine {
        let mut t = vec![0u8; space.dimension()];
        t[0] = 1;
        gens.push(space.affine_permutation(&space.identity_matrix(), &t)?);
    }
    let group = generate_group(space.size(), gens, cap)?;
    let expected = if affine { affine_group_order(d, q)? } else { general_linear_order(d, q)? };
    assert_eq!(group.order(), expected, "generated group order disagrees with the closed form");
    Ok((group, space))
}

/// `GL(d, q)` acting on `F_q^d`.
pub fn make_gl(d: u32, q: u32) -> Result<FiniteGroup> {
    make_gl_with_cap(d, q, DEFAULT_ELEMENT_CAP)
}

pub fn make_gl_with_cap(d: u32, q: u32, cap: usize) -> Result<FiniteGroup> {
    linear_group(d, q, false, cap).map(|(g, _)| g)
}

/// `AGL(d, q)` acting on `F_q^d`.
pub fn make_agl(d: u32, q: u32) -> Result<FiniteGroup> {
    make_agl_with_cap(d, q, DEFAULT_ELEMENT_CAP)
}

pub fn make_agl_with_cap(d: u32, q: u32, cap: usize) -> Result<FiniteGroup> {
    linear_group(d, q, true, cap).map(|(g, _)| g)
}
