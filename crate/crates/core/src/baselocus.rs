//! Base-locus verdicts for nef classes on `X` and `X'`, the numerical form
//! of Mayer's criterion on K3 surfaces, and the moduli-level statements for
//! `M_{d,m}`.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::citations::Citation;
use crate::cones;
use crate::error::{Error, Result};
use crate::flop::{self, VanishingTrace};
use crate::lattice::{GeneralClass, GramLattice, HLClass, LambdaTag, LatticeVector, Model};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Verdict {
    Free,
    /// Base locus is the flopped plane `P ≅ P²` with reduced structure.
    PlaneP2Reduced,
    NotNef,
    ZeroClass,
}

impl Verdict {
    pub fn name(self) -> &'static str {
        match self {
            Verdict::Free => "Free",
            Verdict::PlaneP2Reduced => "PlaneP2Reduced",
            Verdict::NotNef => "NotNef",
            Verdict::ZeroClass => "ZeroClass",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BaseLocusReport {
    pub class: HLClass,
    pub model: Model,
    pub verdict: Verdict,
    pub big: bool,
    pub citations: Vec<Citation>,
    /// The sufficient-condition replay behind the verdict, for nef classes.
    pub trace: Option<VanishingTrace>,
}

/// Base locus of `aH + bL` (or `aH' + bL'`) on the given model.
///
/// Only `H + L` on `X` has base points. Every `Free` verdict is backed by a
/// trace whose argument applies.
pub fn classify(c: &HLClass, model: Model) -> BaseLocusReport {
    let report = cones::cone_report(c);
    let mut out = BaseLocusReport {
        class: c.clone(),
        model,
        verdict: Verdict::ZeroClass,
        big: report.is_big,
        citations: Vec::new(),
        trace: None,
    };
    if c.is_zero() {
        return out;
    }
    if !report.is_nef_on(model) {
        out.verdict = Verdict::NotNef;
        return out;
    }
    let trace = flop::vanishing_argument_applies(c, model).expect("class is nef");
    let mut citations = trace.citations();
    let exceptional = model == Model::X && c.a.is_one() && c.b.is_one();
    if exceptional {
        debug_assert!(!trace.applies);
        out.verdict = Verdict::PlaneP2Reduced;
        citations.extend([
            Citation::FlopConstant,
            Citation::MuSurjective,
            Citation::KernelComparison,
            Citation::PlaneBaseLocus,
            Citation::ReducedBaseLocus,
        ]);
    } else {
        debug_assert!(trace.applies, "{c} on {model}");
        out.verdict = Verdict::Free;
        citations.push(match model {
            Model::X => Citation::NefXFree,
            Model::XPrime => Citation::NefXPrimeFree,
        });
    }
    let mut seen = Vec::new();
    citations.retain(|c| {
        let fresh = !seen.contains(c);
        seen.push(*c);
        fresh
    });
    out.citations = citations;
    out.trace = Some(trace);
    out
}

/// `h = mE + C` with `q(E) = 0`, `q(C) = -2`, `(E, C) = 1`, `m ≥ 2`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MayerDecomposition {
    pub m: BigInt,
    pub e: LatticeVector,
    pub c: LatticeVector,
}

impl MayerDecomposition {
    /// Re-checks the defining constraints against `g` and `h`.
    pub fn is_valid(&self, g: &GramLattice, h: &[BigInt]) -> Result<bool> {
        let recomposed: Vec<BigInt> = self.e.iter().zip(&self.c).map(|(e, c)| &self.m * e + c).collect();
        Ok(self.m >= BigInt::from(2)
            && recomposed.as_slice() == h
            && g.square(&self.e)?.is_zero()
            && g.square(&self.c)? == BigInt::from(-2)
            && g.pair(&self.e, &self.c)?.is_one())
    }
}

/// All numerical Mayer decompositions of `h` with `E` in the box
/// `[-bound, bound]^rank` and `2 ≤ m ≤ bound`, ordered by `m`, then `E`
/// lexicographically.
///
/// Effectivity and smoothness of `E` and `C` are not checked: an empty result
/// only says that no numerical decomposition exists within the bound.
pub fn mayer_search(g: &GramLattice, h: &[BigInt], coeff_bound: &BigInt) -> Result<Vec<MayerDecomposition>> {
    if g.rank() > 2 {
        return Err(Error::RankUnsupported(g.rank()));
    }
    if *coeff_bound < BigInt::one() {
        return Err(Error::InvalidBound(coeff_bound.to_string()));
    }
    let qh = g.square(h)?;
    if !qh.is_positive() {
        return Err(Error::NotBig(qh.to_string()));
    }
    // With q(E) = 0: (E, C) = (E, h) and q(C) = q(h) - 2m(E, h) = q(h) - 2m,
    // so m = q(h)/2 + 1 is forced and only E remains to be searched.
    let m: BigInt = &qh / 2 + 1;
    if m < BigInt::from(2) || m > *coeff_bound {
        return Ok(Vec::new());
    }
    let mut found = Vec::new();
    for e in BoxIter::new(g.rank(), coeff_bound) {
        if !g.square(&e)?.is_zero() || !g.pair(&e, h)?.is_one() {
            continue;
        }
        let c: Vec<BigInt> = h.iter().zip(&e).map(|(hi, ei)| hi - &m * ei).collect();
        let dec = MayerDecomposition { m: m.clone(), e, c };
        debug_assert!(dec.is_valid(g, h)?);
        found.push(dec);
    }
    Ok(found)
}

/// Lexicographic enumeration of `[-bound, bound]^rank`.
struct BoxIter {
    bound: BigInt,
    next: Option<Vec<BigInt>>,
}

impl BoxIter {
    fn new(rank: usize, bound: &BigInt) -> Self {
        BoxIter {
            bound: bound.clone(),
            next: Some(vec![-bound; rank]),
        }
    }
}

impl Iterator for BoxIter {
    type Item = Vec<BigInt>;

    fn next(&mut self) -> Option<Vec<BigInt>> {
        let current = self.next.take()?;
        let mut succ = current.clone();
        for i in (0..succ.len()).rev() {
            if succ[i] < self.bound {
                succ[i] += 1;
                self.next = Some(succ);
                return Some(current);
            }
            succ[i] = -&self.bound;
        }
        Some(current)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ModuliVerdict {
    pub d: BigInt,
    pub m: BigInt,
    pub nonempty: bool,
    pub witness: Option<GeneralClass>,
    /// `None` when not asserted (empty moduli space, or existence query only).
    pub generic_bpf: Option<bool>,
    pub citations: Vec<Citation>,
}

impl ModuliVerdict {
    /// The witness in `(H, L)` coordinates when it lives on the degree-two example.
    pub fn witness_hl(&self) -> Option<HLClass> {
        let w = self.witness.as_ref()?;
        (w.lambda() == LambdaTag::DEGREE_TWO && w.half_lambda_square().is_one() && w.n() == 2)
            .then(|| HLClass::from_hdelta(w.a().clone(), w.b().clone()))
    }
}

fn check_moduli_args(d: &BigInt, m: &BigInt) -> Result<()> {
    if !d.is_positive() {
        return Err(Error::NonPositiveSquare(d.to_string()));
    }
    if !(m.is_one() || *m == BigInt::from(2)) {
        return Err(Error::UnsupportedDivisibility(m.to_string()));
    }
    Ok(())
}

/// Whether `M_{d,m}` (K3^[2]-type, `q(A) = 2d`, `div(A) = m`) is nonempty,
/// with a primitive witness class in the positive cone.
pub fn moduli_nonempty(d: &BigInt, m: &BigInt) -> Result<ModuliVerdict> {
    check_moduli_args(d, m)?;
    let mut verdict = ModuliVerdict {
        d: d.clone(),
        m: m.clone(),
        nonempty: false,
        witness: None,
        generic_bpf: None,
        citations: vec![Citation::DivisibilityFormula],
    };
    if m.is_one() {
        verdict.nonempty = true;
        verdict.witness = Some(GeneralClass::new(1, 0, d.clone(), 2)?);
        verdict.citations.push(Citation::ModuliDivOneWitness);
        return Ok(verdict);
    }
    verdict.citations.push(Citation::ModuliDivTwoWitness);
    if d.mod_floor(&BigInt::from(4)) == BigInt::from(3) {
        let k: BigInt = (d + 1) / 4;
        let two_k = BigInt::from(2) * &k;
        let witness = HLClass::new(1, &two_k - 1).to_general();
        debug_assert_eq!(witness.a(), &two_k);
        verdict.nonempty = true;
        verdict.witness = Some(witness);
    }
    Ok(verdict)
}

/// Generic base point freeness on `M_{d,m}`: true whenever it is nonempty.
pub fn generic_bpf(d: &BigInt, m: &BigInt) -> Result<ModuliVerdict> {
    let mut verdict = moduli_nonempty(d, m)?;
    if !verdict.nonempty {
        return Ok(verdict);
    }
    verdict.generic_bpf = Some(true);
    let exceptional = *d == BigInt::from(3) && *m == BigInt::from(2);
    if m.is_one() {
        verdict.citations.push(Citation::HBasePointFree);
    } else if !exceptional {
        // H' + (2k-1)L' is nef on X' once k ≥ 2
        verdict.citations.push(Citation::NefXPrimeFree);
    }
    verdict.citations.push(if exceptional {
        Citation::GenericBpfExceptional
    } else {
        Citation::GenericBpfGeneral
    });
    Ok(verdict)
}
