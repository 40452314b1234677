//! Named mathematical statements that verdicts and traces rest on.
//!
//! Each [`Citation`] has a stable id and a one-line statement. The bundled
//! manifest [`MANIFEST`] lists every pair, tab separated, and every
//! statement emitted by the library appears in it verbatim:
//!
//! ```
//! use k3n_core::citations::{Citation, manifest_lookup};
//!
//! for c in Citation::ALL {
//!     assert_eq!(manifest_lookup(c.id()), Some(c.statement()));
//! }
//! ```

/// The bundled manifest: one `id<TAB>statement` line per citation.
pub const MANIFEST: &str = include_str!("../citations.tsv");

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Citation {
    RiemannRoch,
    LagrangianFibration,
    DivisibilityFormula,
    HBasePointFree,
    FlopPullbackComparison,
    ExceptionalRestriction,
    FlopConstant,
    KodairaReduction,
    NefXPrimeFree,
    NefXFree,
    TautologicalDeterminant,
    PlaneBaseLocus,
    ReducedBaseLocus,
    MuSurjective,
    KernelComparison,
    MayerCriterion,
    ModuliDivOneWitness,
    ModuliDivTwoWitness,
    GenericBpfGeneral,
    GenericBpfExceptional,
}

impl Citation {
    pub const ALL: [Citation; 20] = [
        Citation::RiemannRoch,
        Citation::LagrangianFibration,
        Citation::DivisibilityFormula,
        Citation::HBasePointFree,
        Citation::FlopPullbackComparison,
        Citation::ExceptionalRestriction,
        Citation::FlopConstant,
        Citation::KodairaReduction,
        Citation::NefXPrimeFree,
        Citation::NefXFree,
        Citation::TautologicalDeterminant,
        Citation::PlaneBaseLocus,
        Citation::ReducedBaseLocus,
        Citation::MuSurjective,
        Citation::KernelComparison,
        Citation::MayerCriterion,
        Citation::ModuliDivOneWitness,
        Citation::ModuliDivTwoWitness,
        Citation::GenericBpfGeneral,
        Citation::GenericBpfExceptional,
    ];

    pub fn id(self) -> &'static str {
        match self {
            Citation::RiemannRoch => "riemann-roch",
            Citation::LagrangianFibration => "lagrangian-fibration",
            Citation::DivisibilityFormula => "divisibility-formula",
            Citation::HBasePointFree => "h-base-point-free",
            Citation::FlopPullbackComparison => "flop-pullback-comparison",
            Citation::ExceptionalRestriction => "exceptional-restriction",
            Citation::FlopConstant => "flop-constant",
            Citation::KodairaReduction => "kodaira-reduction",
            Citation::NefXPrimeFree => "nef-xprime-free",
            Citation::NefXFree => "nef-x-free",
            Citation::TautologicalDeterminant => "tautological-determinant",
            Citation::PlaneBaseLocus => "h-plus-l-base-locus",
            Citation::ReducedBaseLocus => "h-plus-l-reduced",
            Citation::MuSurjective => "mu-surjective",
            Citation::KernelComparison => "kernel-comparison",
            Citation::MayerCriterion => "mayer-criterion",
            Citation::ModuliDivOneWitness => "moduli-div-one-witness",
            Citation::ModuliDivTwoWitness => "moduli-div-two-witness",
            Citation::GenericBpfGeneral => "generic-bpf-general",
            Citation::GenericBpfExceptional => "generic-bpf-exceptional",
        }
    }

    pub fn statement(self) -> &'static str {
        match self {
            Citation::RiemannRoch => {
                "chi(X, A) = C(q(A)/2 + n + 1, n) for a line bundle A on a K3^[n]-type variety"
            }
            Citation::LagrangianFibration => {
                "a primitive nef class A != 0 with q(A) = 0 on a K3^[n]-type variety has h0 = n + 1 and is base point free"
            }
            Citation::DivisibilityFormula => {
                "div(a*lambda + b*delta) = gcd(a, 2b(n - 1)) for primitive lambda in the unimodular K3 lattice"
            }
            Citation::HBasePointFree => {
                "H, associated with the base point free H_S, is base point free on X = Hilb2(S)"
            }
            Citation::FlopPullbackComparison => {
                "phi'^*(A') = phi^*(A) + m (A, W)_q E on the common blow-up of X and X'"
            }
            Citation::ExceptionalRestriction => {
                "phi^*(A)|_E = O(m (A, W)_q, 0), phi'^*(A')|_E = O(0, -m (A', W')_q) and E|_E = O(-1, -1) on E = Z in P2 x P2dual"
            }
            Citation::FlopConstant => {
                "m = 1/2 for the flopped plane P in X, so deg(A|_C) = (A, W)_q / 2 on every line C in P"
            }
            Citation::KodairaReduction => {
                "omega of the blow-up is E, so H1(pullback - E) = 0 as soon as pullback - 2E is big and nef"
            }
            Citation::NefXPrimeFree => "every nef line bundle on X' is base point free",
            Citation::NefXFree => "every nef line bundle aH + bL != H + L on X is base point free",
            Citation::TautologicalDeterminant => {
                "det((kH_S)^[2]) = kH - delta = (k - 1)H + L is globally generated once kH_S is very ample (k >= 3)"
            }
            Citation::PlaneBaseLocus => {
                "the base locus of the ample bundle H + L on X is the plane P, isomorphic to P2"
            }
            Citation::ReducedBaseLocus => {
                "the base locus of H + L carries the reduced induced scheme structure"
            }
            Citation::MuSurjective => {
                "the multiplication map H0(X, L) (x) H0(X, H) -> H0(X, H + L) is surjective"
            }
            Citation::KernelComparison => {
                "the kernels of mu and of mu' : V (x) W -> H0(P2 x P2, O(2, 2)) have the same dimension"
            }
            Citation::MayerCriterion => {
                "a big and nef H on a K3 surface has base points iff H = mE + C with m >= 2, E smooth elliptic, C smooth rational, (E, C) = 1"
            }
            Citation::ModuliDivOneWitness => {
                "for m = 1 the class associated with A_S, A_S^2 = 2d, on a K3 of Picard rank one has q = 2d and div = 1"
            }
            Citation::ModuliDivTwoWitness => {
                "M_{d,2} is nonempty only for d = 4k - 1, and then H + (2k - 1)L on the degree-two example has q = 2d and div = 2"
            }
            Citation::GenericBpfGeneral => {
                "for (d, m) != (3, 2) the polarization of a generic pair in M_{d,m} is base point free"
            }
            Citation::GenericBpfExceptional => {
                "the polarization of a generic pair in M_{3,2} is base point free"
            }
        }
    }
}

/// Statement recorded for `id` in [`MANIFEST`].
pub fn manifest_lookup(id: &str) -> Option<&'static str> {
    MANIFEST
        .lines()
        .filter(|l| !l.starts_with('#') && !l.trim().is_empty())
        .filter_map(|l| l.split_once('\t'))
        .find(|(k, _)| *k == id)
        .map(|(_, v)| v)
}
