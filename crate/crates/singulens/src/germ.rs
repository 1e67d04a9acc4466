//! Polynomial germs: exact multivariate polynomials over the rationals,
//! optionally carrying a semigroup context that interprets the variables as
//! coordinates on an affine toric variety.

use crate::arith::Rat;
use crate::error::{Error, Result};
use crate::semigroup::Semigroup;
use num_traits::{One, Signed, Zero};
use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

/// A polynomial germ at the origin.  Exponent vectors are nonnegative, no
/// stored coefficient is zero, and `vars` matches the context's generator
/// count when a context is present.
#[derive(Debug, Clone, PartialEq)]
pub struct Germ {
    vars: usize,
    terms: BTreeMap<Vec<i64>, Rat>,
    context: Option<Arc<Semigroup>>,
}

impl Germ {
    pub fn zero(vars: usize, context: Option<Arc<Semigroup>>) -> Result<Self> {
        if let Some(s) = &context {
            if s.r() != vars {
                return Err(Error::DimensionMismatch { expected: s.r(), got: vars });
            }
        }
        Ok(Germ { vars, terms: BTreeMap::new(), context })
    }

    /// Build a germ from raw terms, merging duplicates and dropping zeros.
    pub fn from_terms<I>(vars: usize, raw: I, context: Option<Arc<Semigroup>>) -> Result<Self>
    where
        I: IntoIterator<Item = (Vec<i64>, Rat)>,
    {
        let mut g = Germ::zero(vars, context)?;
        for (exp, coeff) in raw {
            g.add_term(exp, coeff)?;
        }
        Ok(g)
    }

    pub fn monomial(
        vars: usize,
        exp: Vec<i64>,
        coeff: Rat,
        context: Option<Arc<Semigroup>>,
    ) -> Result<Self> {
        Germ::from_terms(vars, [(exp, coeff)], context)
    }

    /// The i-th coordinate germ.
    pub fn variable(vars: usize, i: usize, context: Option<Arc<Semigroup>>) -> Result<Self> {
        let mut exp = vec![0; vars];
        exp[i] = 1;
        Germ::monomial(vars, exp, Rat::one(), context)
    }

    pub fn constant(vars: usize, value: Rat, context: Option<Arc<Semigroup>>) -> Result<Self> {
        Germ::from_terms(vars, [(vec![0; vars], value)], context)
    }

    fn add_term(&mut self, exp: Vec<i64>, coeff: Rat) -> Result<()> {
        if exp.len() != self.vars {
            return Err(Error::DimensionMismatch { expected: self.vars, got: exp.len() });
        }
        if exp.iter().any(|&e| e < 0) {
            return Err(Error::NegativeExponent);
        }
        if coeff.is_zero() {
            return Ok(());
        }
        let entry = self.terms.entry(exp.clone()).or_insert_with(Rat::zero);
        *entry += coeff;
        if entry.is_zero() {
            self.terms.remove(&exp);
        }
        Ok(())
    }

    pub fn vars(&self) -> usize {
        self.vars
    }

    pub fn terms(&self) -> &BTreeMap<Vec<i64>, Rat> {
        &self.terms
    }

    pub fn context(&self) -> Option<&Arc<Semigroup>> {
        self.context.as_ref()
    }

    /// True when the polynomial representative is identically zero.
    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_monomial(&self) -> bool {
        self.terms.len() == 1
    }

    pub fn is_binomial_or_less(&self) -> bool {
        self.terms.len() <= 2
    }

    pub fn is_constant(&self) -> bool {
        self.terms.keys().all(|k| k.iter().all(|&e| e == 0))
    }

    /// The ambient exponent vectors of the support.
    pub fn exponents(&self) -> Vec<Vec<i64>> {
        self.terms.keys().cloned().collect()
    }

    pub(crate) fn check_compatible(&self, other: &Germ) -> Result<()> {
        if self.vars != other.vars {
            return Err(Error::DimensionMismatch { expected: self.vars, got: other.vars });
        }
        let same = match (&self.context, &other.context) {
            (None, None) => true,
            (Some(a), Some(b)) => a == b,
            _ => false,
        };
        if !same {
            return Err(Error::HypothesisNotMet(
                "germs live in different coordinate rings".into(),
            ));
        }
        Ok(())
    }

    pub fn add(&self, other: &Germ) -> Result<Germ> {
        self.check_compatible(other)?;
        let mut out = self.clone();
        for (exp, coeff) in &other.terms {
            out.add_term(exp.clone(), coeff.clone())?;
        }
        Ok(out)
    }

    pub fn neg(&self) -> Germ {
        let mut out = self.clone();
        for coeff in out.terms.values_mut() {
            *coeff = -coeff.clone();
        }
        out
    }

    pub fn sub(&self, other: &Germ) -> Result<Germ> {
        self.add(&other.neg())
    }

    pub fn scale(&self, c: &Rat) -> Germ {
        if c.is_zero() {
            return Germ { vars: self.vars, terms: BTreeMap::new(), context: self.context.clone() };
        }
        let mut out = self.clone();
        for coeff in out.terms.values_mut() {
            *coeff *= c;
        }
        out
    }

    pub fn mul(&self, other: &Germ) -> Result<Germ> {
        self.check_compatible(other)?;
        let mut out = Germ::zero(self.vars, self.context.clone())?;
        for (a, ca) in &self.terms {
            for (b, cb) in &other.terms {
                let exp: Vec<i64> = a.iter().zip(b).map(|(x, y)| x + y).collect();
                out.add_term(exp, ca * cb)?;
            }
        }
        Ok(out)
    }

    pub fn pow(&self, k: u32) -> Result<Germ> {
        let mut out = Germ::constant(self.vars, Rat::one(), self.context.clone())?;
        for _ in 0..k {
            out = out.mul(self)?;
        }
        Ok(out)
    }

    /// Formal partial derivative with respect to the i-th ambient variable.
    pub fn derivative(&self, i: usize) -> Result<Germ> {
        if i >= self.vars {
            return Err(Error::DimensionMismatch { expected: self.vars, got: i + 1 });
        }
        let mut out = Germ::zero(self.vars, self.context.clone())?;
        for (exp, coeff) in &self.terms {
            if exp[i] > 0 {
                let mut e = exp.clone();
                e[i] -= 1;
                out.add_term(e, coeff * crate::arith::rat_int(exp[i]))?;
            }
        }
        Ok(out)
    }

    /// Substitute `images[i]` for the i-th variable.  All images must share a
    /// variable count and context, which become those of the result.
    pub fn substitute(&self, images: &[Germ]) -> Result<Germ> {
        if images.len() != self.vars {
            return Err(Error::DimensionMismatch { expected: self.vars, got: images.len() });
        }
        let vars = images[0].vars;
        let context = images[0].context.clone();
        for im in images {
            images[0].check_compatible(im)?;
        }
        let mut out = Germ::zero(vars, context.clone())?;
        for (exp, coeff) in &self.terms {
            let mut term = Germ::constant(vars, coeff.clone(), context.clone())?;
            for (i, &e) in exp.iter().enumerate() {
                if e > 0 {
                    term = term.mul(&images[i].pow(u32::try_from(e).expect("exponent fits"))?)?;
                }
            }
            out = out.add(&term)?;
        }
        Ok(out)
    }

    /// The part of the germ of total ambient degree exactly `d`.
    pub fn graded_part(&self, d: i64) -> Germ {
        let terms: BTreeMap<Vec<i64>, Rat> = self
            .terms
            .iter()
            .filter(|(k, _)| k.iter().sum::<i64>() == d)
            .map(|(k, c)| (k.clone(), c.clone()))
            .collect();
        Germ { vars: self.vars, terms, context: self.context.clone() }
    }

    /// Order of the germ.  In the affine case this is the minimal total
    /// degree of the support; on a toric variety it is the minimum over the
    /// (cancellation-aware) support of the fiber-minimal ambient degree.
    pub fn order(&self) -> Result<usize> {
        match &self.context {
            None => {
                if self.terms.is_empty() {
                    return Err(Error::ZeroGerm);
                }
                Ok(self
                    .terms
                    .keys()
                    .map(|k| k.iter().sum::<i64>() as usize)
                    .min()
                    .expect("nonempty"))
            }
            Some(s) => {
                let supp = s.support(self)?;
                if supp.is_empty() {
                    return Err(Error::ZeroGerm);
                }
                let mut best: Option<usize> = None;
                for pt in &supp {
                    let d = s.minimal_fiber_degree(&pt.value)?;
                    best = Some(best.map_or(d, |b| b.min(d)));
                }
                Ok(best.expect("nonempty support"))
            }
        }
    }

    /// Render with the given variable names.
    pub fn display_with_names(&self, names: &[String]) -> String {
        if self.terms.is_empty() {
            return "0".to_string();
        }
        let mut keys: Vec<&Vec<i64>> = self.terms.keys().collect();
        keys.sort_by_key(|k| (k.iter().sum::<i64>(), std::cmp::Reverse((*k).clone())));
        let mut out = String::new();
        for (idx, key) in keys.iter().enumerate() {
            let coeff = &self.terms[*key];
            let mut factors: Vec<String> = Vec::new();
            let abs = coeff.abs();
            let is_const = key.iter().all(|&e| e == 0);
            if !abs.is_one() || is_const {
                factors.push(crate::arith::rat_display(&abs));
            }
            for (i, &e) in key.iter().enumerate() {
                if e == 1 {
                    factors.push(names[i].clone());
                } else if e > 1 {
                    factors.push(format!("{}^{}", names[i], e));
                }
            }
            let term = factors.join("*");
            if idx == 0 {
                if coeff.is_negative() {
                    out.push('-');
                }
                out.push_str(&term);
            } else {
                out.push_str(if coeff.is_negative() { " - " } else { " + " });
                out.push_str(&term);
            }
        }
        out
    }

    fn default_names(vars: usize) -> Vec<String> {
        if vars <= 4 {
            ["x", "y", "z", "w"][..vars].iter().map(|s| s.to_string()).collect()
        } else {
            (1..=vars).map(|i| format!("x{i}")).collect()
        }
    }
}

impl fmt::Display for Germ {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.display_with_names(&Germ::default_names(self.vars)))
    }
}
