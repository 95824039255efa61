//! Buchberger's algorithm in lex order (variable 0 largest).

use num_traits::One;

use crate::exactalg::{Exponent, GaussianRational, MultiPoly};
use crate::error::{Error, Result};

/// A reduced, monic Gröbner basis, sorted by decreasing leading monomial.
#[derive(Clone, Debug, PartialEq)]
pub struct GroebnerBasis {
    nvars: usize,
    polys: Vec<MultiPoly>,
}

fn divides(a: &[u32], b: &[u32]) -> bool {
    a.iter().zip(b).all(|(x, y)| x <= y)
}

fn lcm(a: &[u32], b: &[u32]) -> Exponent {
    a.iter().zip(b).map(|(x, y)| *x.max(y)).collect()
}

fn sub_exp(a: &[u32], b: &[u32]) -> Vec<u32> {
    a.iter().zip(b).map(|(x, y)| x - y).collect()
}

fn lead(p: &MultiPoly) -> (Exponent, GaussianRational) {
    let (e, c) = p.leading_term().expect("leading term of zero polynomial");
    (e.clone(), c.clone())
}

fn monic(p: &MultiPoly) -> MultiPoly {
    let (_, c) = lead(p);
    p.scale(&(GaussianRational::one() / &c))
}

/// Full normal form of `p` with respect to `basis` (any generating list).
fn reduce_by(p: &MultiPoly, basis: &[MultiPoly]) -> MultiPoly {
    let leads: Vec<(Exponent, GaussianRational)> = basis.iter().map(lead).collect();
    let mut work = p.clone();
    let mut rem = MultiPoly::zero(p.nvars());
    while let Some((e, c)) = work.leading_term().map(|(e, c)| (e.clone(), c.clone())) {
        match leads.iter().position(|(le, _)| divides(le, &e)) {
            Some(k) => {
                let (le, lc) = &leads[k];
                let factor = &c / lc;
                let shifted = basis[k].mul_monomial(&sub_exp(&e, le), &factor);
                work = &work - &shifted;
            }
            None => {
                rem.add_term(e.clone(), c.clone());
                work.add_term(e, -c);
            }
        }
    }
    rem
}

pub fn s_polynomial(a: &MultiPoly, b: &MultiPoly) -> MultiPoly {
    let (ea, ca) = lead(a);
    let (eb, cb) = lead(b);
    let l = lcm(&ea, &eb);
    let ta = a.mul_monomial(&sub_exp(&l, &ea), &(GaussianRational::one() / &ca));
    let tb = b.mul_monomial(&sub_exp(&l, &eb), &(GaussianRational::one() / &cb));
    &ta - &tb
}

impl GroebnerBasis {
    /// Computes the reduced Gröbner basis of the ideal generated by `gens`.
    pub fn compute(gens: &[MultiPoly]) -> Result<Self> {
        let nvars = match gens.first() {
            Some(g) => g.nvars(),
            None => return Err(Error::InvalidArgument("empty generator list".into())),
        };
        if let Some(g) = gens.iter().find(|g| g.nvars() != nvars) {
            return Err(Error::VariableCount { left: nvars, right: g.nvars() });
        }
        let mut basis: Vec<MultiPoly> = gens.iter().filter(|g| !g.is_zero()).map(monic).collect();
        let mut pairs: Vec<(usize, usize)> = Vec::new();
        for j in 0..basis.len() {
            for i in 0..j {
                pairs.push((i, j));
            }
        }
        while let Some((i, j)) = pairs.pop() {
            let (ei, _) = lead(&basis[i]);
            let (ej, _) = lead(&basis[j]);
            // Coprime leading monomials: the S-polynomial reduces to zero.
            if ei.iter().zip(ej.iter()).all(|(a, b)| *a == 0 || *b == 0) {
                continue;
            }
            let r = reduce_by(&s_polynomial(&basis[i], &basis[j]), &basis);
            if !r.is_zero() {
                let k = basis.len();
                basis.push(monic(&r));
                for i in 0..k {
                    pairs.push((i, k));
                }
            }
        }
        // Minimalize, then inter-reduce.
        let mut minimal: Vec<MultiPoly> = Vec::new();
        for (k, g) in basis.iter().enumerate() {
            let (e, _) = lead(g);
            let redundant = basis.iter().enumerate().any(|(m, h)| {
                let (f, _) = lead(h);
                m != k && divides(&f, &e) && (f != e || m < k)
            });
            if !redundant {
                minimal.push(g.clone());
            }
        }
        let mut reduced = Vec::with_capacity(minimal.len());
        for k in 0..minimal.len() {
            let others: Vec<MultiPoly> =
                minimal.iter().enumerate().filter(|(m, _)| *m != k).map(|(_, g)| g.clone()).collect();
            let (e, c) = lead(&minimal[k]);
            let tail = {
                let mut t = minimal[k].clone();
                t.add_term(e.clone(), -c.clone());
                t
            };
            let mut g = reduce_by(&tail, &others);
            g.add_term(e, c);
            reduced.push(monic(&g));
        }
        reduced.sort_by(|a, b| lead(b).0.cmp(&lead(a).0));
        Ok(GroebnerBasis { nvars, polys: reduced })
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn polys(&self) -> &[MultiPoly] {
        &self.polys
    }

    pub fn leading_monomials(&self) -> Vec<Exponent> {
        self.polys.iter().map(|p| lead(p).0).collect()
    }

    /// Normal form: the unique representative spanned by standard monomials.
    pub fn normal_form(&self, p: &MultiPoly) -> MultiPoly {
        reduce_by(p, &self.polys)
    }

    pub fn contains(&self, p: &MultiPoly) -> bool {
        self.normal_form(p).is_zero()
    }

    /// True if no leading monomial divides `e`.
    pub fn is_standard(&self, e: &[u32]) -> bool {
        self.polys.iter().all(|p| !divides(&lead(p).0, e))
    }

    /// Whether the basis generates the unit ideal.
    pub fn is_unit_ideal(&self) -> bool {
        self.polys.iter().any(|p| lead(p).0.iter().all(|v| *v == 0))
    }

    /// Standard monomials whose weighted degree `Σ w_i e_i` equals `deg`.
    pub fn standard_monomials_of_degree(&self, weights: &[u32], deg: u32) -> Vec<Exponent> {
        let mut out = Vec::new();
        let mut cur = vec![0u32; self.nvars];
        enumerate(weights, deg, 0, &mut cur, &mut |e| {
            if self.is_standard(e) {
                out.push(e.iter().copied().collect());
            }
        });
        out.sort();
        out
    }

    /// Checks the Buchberger criterion and that every generator lies in the ideal.
    pub fn verify(&self, gens: &[MultiPoly]) -> Result<()> {
        for g in gens {
            if !self.normal_form(g).is_zero() {
                return Err(Error::Contract(format!("generator {g} does not reduce to 0")));
            }
        }
        for j in 0..self.polys.len() {
            for i in 0..j {
                let s = s_polynomial(&self.polys[i], &self.polys[j]);
                if !self.normal_form(&s).is_zero() {
                    return Err(Error::Contract(format!("S-polynomial of basis elements {i},{j} is nonzero")));
                }
            }
        }
        Ok(())
    }
}

fn enumerate(weights: &[u32], left: u32, i: usize, cur: &mut Vec<u32>, f: &mut impl FnMut(&[u32])) {
    if i == cur.len() {
        if left == 0 {
            f(cur);
        }
        return;
    }
    let w = weights[i];
    if w == 0 {
        // Degree-zero variables would give infinitely many monomials.
        cur[i] = 0;
        enumerate(weights, left, i + 1, cur, f);
        return;
    }
    let mut k = 0;
    while k * w <= left {
        cur[i] = k;
        enumerate(weights, left - k * w, i + 1, cur, f);
        k += 1;
    }
    cur[i] = 0;
}
