//! One checker per identity. Every check produces an [`Identity`]: a left
//! side and a list of coefficient-weighted terms whose difference is the
//! exact residual. Coefficients are the closed-form or derived scalars the
//! identity asserts, so perturbing any one of them is a negative control.

mod askey_wilson;
mod big_q;
mod generic;
mod jacobi;
mod ultra;

use std::fmt;
use std::str::FromStr;
use std::sync::OnceLock;

use num_traits::{One, Zero};

pub(crate) use askey_wilson::structure_coeffs as aw_structure_coeffs;
pub(crate) use big_q::structure_coeffs as bigq_structure_coeffs;
pub use big_q::{derive_second_order_qdiff, reduce_bigq, DqCoefficients, QDiffEquation, Reduction};

use crate::error::{Error, Result};
use crate::exact_algebra::{Laurent, Scalar, XPoly};
use crate::families::{FamilyData, FamilyKind};
use crate::operators::{d_from_l, family_d_explicit, family_l, PolyOperator};

/// How the polynomials inside an identity are written.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Basis {
    /// Coefficients of powers of `x`.
    X,
    /// Laurent coefficients in `z`, `x = (z + 1/z)/2`.
    Z,
    /// Flattened arrays (operator matrices, scalar vectors).
    Flat,
}

/// What the residual is expected to be.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Expect {
    Zero,
    Nonzero,
    /// Recorded, never asserted.
    Info,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Term {
    pub label: String,
    pub coeff: Scalar,
    pub poly: Laurent,
}

/// `lhs - sum coeff_k poly_k`, expected to vanish (or not, see [`Expect`]).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Identity {
    pub id: IdentityId,
    pub n: usize,
    pub basis: Basis,
    pub expect: Expect,
    pub lhs: Laurent,
    pub terms: Vec<Term>,
    /// Extra named values reported next to the family parameters.
    pub extra: Vec<(String, Scalar)>,
}

impl Identity {
    pub fn new(id: IdentityId, n: usize, basis: Basis, lhs: Laurent) -> Self {
        Self { id, n, basis, expect: id.expect(), lhs, terms: Vec::new(), extra: Vec::new() }
    }

    pub fn term(mut self, label: impl Into<String>, coeff: Scalar, poly: Laurent) -> Self {
        self.terms.push(Term { label: label.into(), coeff, poly });
        self
    }

    fn residual_with(&self, bump: Option<usize>) -> Laurent {
        let mut r = self.lhs.clone();
        for (i, t) in self.terms.iter().enumerate() {
            let c = if bump == Some(i) { &t.coeff + Scalar::one() } else { t.coeff.clone() };
            r = &r - &t.poly.scale(&c);
        }
        r
    }

    pub fn residual(&self) -> Laurent {
        self.residual_with(None)
    }

    /// Residual after adding 1 to the coefficient of term `i`.
    pub fn mutated_residual(&self, i: usize) -> Laurent {
        self.residual_with(Some(i))
    }

    /// Whether the identity meets its expectation (`Info` always does).
    pub fn holds(&self) -> bool {
        match self.expect {
            Expect::Zero => self.residual().is_zero(),
            Expect::Nonzero => !self.residual().is_zero(),
            Expect::Info => true,
        }
    }

    /// For asserted identities: every single-coefficient mutation is caught.
    pub fn mutations_detected(&self) -> bool {
        (0..self.terms.len()).all(|i| !self.mutated_residual(i).is_zero())
    }
}

macro_rules! identity_ids {
    ($($variant:ident => $name:literal),* $(,)?) => {
        /// Identity identifiers, named by role.
        #[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
        pub enum IdentityId { $($variant),* }

        impl IdentityId {
            pub const ALL: &'static [IdentityId] = &[$(IdentityId::$variant),*];

            pub fn name(self) -> &'static str {
                match self { $(IdentityId::$variant => $name),* }
            }
        }
    };
}

identity_ids! {
    DualPath => "dual-path",
    ClosedCoefficients => "closed-coefficients",
    Structure => "structure",
    StructureExplicit => "structure-explicit",
    StructureCoefficients => "structure-coefficients",
    Lowering => "lowering",
    Raising => "raising",
    LoweringExplicit => "lowering-explicit",
    RaisingExplicit => "raising-explicit",
    LoweringAugmented => "lowering-augmented",
    RaisingAugmented => "raising-augmented",
    Eigenvalue => "eigenvalue",
    SlopeGap => "slope-gap",
    Bispectral => "bispectral",
    QBispectral => "q-bispectral",
    DerivativeStructure => "derivative-structure",
    UltraLowering => "ultra-lowering",
    UltraRaising => "ultra-raising",
    UltraDifference => "ultra-difference",
    UltraSubtraction => "ultra-subtraction",
    UltraConnecting => "ultra-connecting",
    UltraRecurrence => "ultra-recurrence",
    UltraQDifference => "ultra-qdifference",
    UltraCombinationStated => "ultra-combination-stated",
    UltraCombination => "ultra-combination",
    DqStructureIntermediate => "dq-structure-intermediate",
    DqStructure => "dq-structure",
    Commutator => "commutator",
    DFromL => "d-from-l",
    OperatorDualPath => "operator-dual-path",
    StringEquation => "string-equation",
    QuasiCommutation => "quasi-commutation",
    SkewSymmetry => "skew-symmetry",
    SymmetryD => "symmetry-d",
    SymmetryX => "symmetry-x",
    NonSkewDetected => "nonskew-detected",
    QDiffRecovery => "qdiff-recovery",
}

/// Whether an identity is checked per degree `n` or once per parameter point.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Scope {
    PerDegree,
    Operator,
}

impl IdentityId {
    pub fn scope(self) -> Scope {
        use IdentityId::*;
        match self {
            Commutator | DFromL | OperatorDualPath | StringEquation | QuasiCommutation | SkewSymmetry
            | SymmetryD | SymmetryX | NonSkewDetected | QDiffRecovery => Scope::Operator,
            _ => Scope::PerDegree,
        }
    }

    /// Operator checks built from the moment pairing; they need moments
    /// up to twice the matrix degree.
    pub fn is_pairing(self) -> bool {
        use IdentityId::*;
        matches!(self, SkewSymmetry | SymmetryD | SymmetryX | NonSkewDetected)
    }

    pub fn expect(self) -> Expect {
        match self {
            IdentityId::QBispectral => Expect::Info,
            IdentityId::NonSkewDetected => Expect::Nonzero,
            _ => Expect::Zero,
        }
    }

    pub fn applies_to(self, kind: FamilyKind) -> bool {
        use FamilyKind as F;
        use IdentityId::*;
        match self {
            DualPath => kind != F::BigQJacobi,
            ClosedCoefficients => kind != F::BigQJacobi,
            LoweringExplicit | RaisingExplicit | LoweringAugmented | RaisingAugmented | QBispectral
            | QuasiCommutation => kind == F::AskeyWilson,
            DerivativeStructure | StringEquation => kind == F::Jacobi,
            UltraLowering | UltraRaising | UltraDifference | UltraSubtraction | UltraConnecting | UltraRecurrence
            | UltraQDifference | UltraCombinationStated | UltraCombination | NonSkewDetected => kind == F::CqUltra,
            DqStructureIntermediate | DqStructure => kind == F::BigQJacobi,
            DFromL => kind != F::BigQJacobi,
            OperatorDualPath => matches!(kind, F::CqJacobiHalf | F::CqJacobiFull | F::CqUltra),
            QDiffRecovery => matches!(kind, F::AskeyWilson | F::BigQJacobi),
            _ => true,
        }
    }

    /// Names accepted on the command line: `all` or a comma-free single name.
    pub fn parse_selection(s: &str) -> Result<Vec<IdentityId>> {
        match s {
            "all" => Ok(Self::ALL.to_vec()),
            _ => Ok(vec![s.parse()?]),
        }
    }
}

impl fmt::Display for IdentityId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for IdentityId {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Self::ALL
            .iter()
            .copied()
            .find(|k| k.name() == s)
            .ok_or_else(|| Error::Parse(format!("unknown identity '{s}'")))
    }
}

/// Family data plus the operators every checker needs.
pub struct Checker<'a> {
    pub data: &'a FamilyData,
    pub l: PolyOperator,
    /// The explicit `D` where the family has one, otherwise `D` from `L`.
    pub d: PolyOperator,
    pub d_explicit: Option<PolyOperator>,
    pub x: PolyOperator,
    qdiff: OnceLock<Result<QDiffEquation>>,
    reduction: OnceLock<Result<Reduction>>,
}

impl<'a> Checker<'a> {
    pub fn new(data: &'a FamilyData) -> Result<Self> {
        let l = family_l(&data.spec)?;
        let d_explicit = family_d_explicit(&data.spec)?;
        let d = d_explicit.clone().unwrap_or_else(|| d_from_l(&l));
        Ok(Self {
            data,
            l,
            d,
            d_explicit,
            x: PolyOperator::x(),
            qdiff: OnceLock::new(),
            reduction: OnceLock::new(),
        })
    }

    pub fn kind(&self) -> FamilyKind {
        self.data.kind()
    }

    pub fn basis(&self) -> Basis {
        if self.kind().is_circle() {
            Basis::Z
        } else {
            Basis::X
        }
    }

    /// The family's natural Laurent form of `f`.
    pub fn lift(&self, f: &XPoly) -> Laurent {
        if self.kind().is_circle() {
            f.to_z_laurent()
        } else {
            f.as_laurent()
        }
    }

    pub fn p(&self, n: usize) -> Laurent {
        self.lift(self.data.p(n))
    }

    /// `p_{n-1}`, with `p_{-1} = 0`.
    pub fn p_prev(&self, n: usize) -> Laurent {
        if n == 0 {
            Laurent::zero()
        } else {
            self.p(n - 1)
        }
    }

    /// Generic slope: coefficient of `x^{n+1}` in `L x^n`.
    pub fn gamma(&self, n: usize) -> Result<Scalar> {
        self.l.slope(n)
    }

    /// `gamma_{n-1}`, zero for `n = 0` (it only ever multiplies `C_0 = 0`).
    pub fn gamma_prev(&self, n: usize) -> Result<Scalar> {
        if n == 0 {
            Ok(Scalar::zero())
        } else {
            self.gamma(n - 1)
        }
    }

    /// Eigenvalue used by the spectral checks: the closed form where the
    /// family has one, otherwise `sum_{j<n} gamma_j` from the closed slopes.
    pub fn lambda(&self, n: usize) -> Result<Scalar> {
        match self.data.spec.lambda(n)? {
            Some(l) => Ok(l),
            None => (0..n).map(|j| self.data.spec.gamma(j)).sum(),
        }
    }

    pub fn qdiff(&self) -> Result<&QDiffEquation> {
        self.qdiff
            .get_or_init(|| derive_second_order_qdiff(self.data))
            .as_ref()
            .map_err(Clone::clone)
    }

    pub fn reduction(&self) -> Result<&Reduction> {
        self.reduction
            .get_or_init(|| reduce_bigq(self.data, self.qdiff()?))
            .as_ref()
            .map_err(Clone::clone)
    }

    /// All instances of `id` for this family: `n = 1..=n_max` for per-degree
    /// identities, one instance (reported at `n = max_deg`) otherwise.
    pub fn check(&self, id: IdentityId, n_max: usize, max_deg: usize) -> Result<Vec<Identity>> {
        if !id.applies_to(self.kind()) {
            return Ok(Vec::new());
        }
        match id.scope() {
            Scope::PerDegree => {
                if n_max + 2 > self.data.cap {
                    return Err(Error::DegreeCap { n: n_max + 2, cap: self.data.cap });
                }
                let mut out = Vec::new();
                for n in 1..=n_max {
                    if let Some(i) = self.check_at(id, n)? {
                        out.push(i);
                    }
                }
                Ok(out)
            }
            Scope::Operator => {
                // other operators act on any degree
                if id.is_pairing() && max_deg + 1 > self.data.cap {
                    return Err(Error::DegreeCap { n: max_deg + 1, cap: self.data.cap });
                }
                self.check_operator(id, max_deg)
            }
        }
    }

    /// A single per-degree instance; `None` where the identity does not
    /// apply to this parameter point.
    pub fn check_at(&self, id: IdentityId, n: usize) -> Result<Option<Identity>> {
        use IdentityId::*;
        Ok(Some(match id {
            DualPath => return self.dual_path(n),
            ClosedCoefficients => self.closed_coefficients(n)?,
            Structure => self.structure(n)?,
            StructureExplicit => self.structure_explicit(n)?,
            StructureCoefficients => self.structure_coefficients(n)?,
            Lowering => self.lowering(n)?,
            Raising => self.raising(n)?,
            LoweringExplicit => self.aw_lowering_explicit(n, false)?,
            RaisingExplicit => self.aw_raising_explicit(n, false)?,
            LoweringAugmented => self.aw_lowering_explicit(n, true)?,
            RaisingAugmented => self.aw_raising_explicit(n, true)?,
            Eigenvalue => self.eigenvalue(n)?,
            SlopeGap => self.slope_gap(n)?,
            Bispectral => self.bispectral(n)?,
            QBispectral => self.q_bispectral(n)?,
            DerivativeStructure => self.derivative_structure(n)?,
            UltraLowering => self.ultra_lowering(n)?,
            UltraRaising => self.ultra_raising(n)?,
            UltraDifference => self.ultra_difference(n)?,
            UltraSubtraction => self.ultra_subtraction(n)?,
            UltraConnecting => self.ultra_connecting(n)?,
            UltraRecurrence => self.ultra_recurrence(n)?,
            UltraQDifference => self.ultra_qdifference(n)?,
            UltraCombinationStated => self.ultra_combination(n, true)?,
            UltraCombination => self.ultra_combination(n, false)?,
            DqStructureIntermediate => self.dq_structure_intermediate(n)?,
            DqStructure => self.dq_structure(n)?,
            _ => return Err(Error::Parse(format!("{id} is not a per-degree identity"))),
        }))
    }

    fn check_operator(&self, id: IdentityId, max_deg: usize) -> Result<Vec<Identity>> {
        use IdentityId::*;
        Ok(match id {
            Commutator => vec![self.commutator(max_deg)?],
            DFromL => vec![self.d_from_l_check(max_deg)?],
            OperatorDualPath => self.operator_dual_path(max_deg)?.into_iter().collect(),
            StringEquation => vec![self.string_equation(max_deg)?],
            QuasiCommutation => self.quasi_commutation(max_deg)?,
            SkewSymmetry => vec![self.pairing(id, &self.l, max_deg, true)?],
            SymmetryD => vec![self.pairing(id, &self.d, max_deg, false)?],
            SymmetryX => vec![self.pairing(id, &self.x, max_deg, false)?],
            NonSkewDetected => vec![self.ultra_nonskew(max_deg)?],
            QDiffRecovery => vec![self.qdiff_recovery()?],
            _ => return Err(Error::Parse(format!("{id} is not an operator identity"))),
        })
    }
}

/// Lays out polynomials (or columns) end to end with a fixed stride, so an
/// operator matrix or a list of scalars becomes a single Laurent polynomial.
pub fn flatten(blocks: &[XPoly], stride: usize) -> Laurent {
    let mut coeffs = vec![Scalar::zero(); blocks.len() * stride];
    for (j, b) in blocks.iter().enumerate() {
        assert!(b.coeffs().len() <= stride, "block exceeds stride");
        for (i, c) in b.coeffs().iter().enumerate() {
            coeffs[j * stride + i] = c.clone();
        }
    }
    Laurent::from_coeffs(0, coeffs)
}

/// A vector of scalars as a flat polynomial.
pub fn scalars(v: &[Scalar]) -> Laurent {
    Laurent::from_coeffs(0, v.to_vec())
}
