//! Exact root-system data for the seven Hermitian symmetric families.
//!
//! Roots are stored as simple-root coefficient vectors and all pairings go
//! through the symmetrized Cartan data, so the exceptional families need no
//! coordinate embedding. Epsilon coordinates exist only as input/output sugar
//! for the classical families.
//!
//! Length normalization: `d = (a,a)/2` is `1` for long roots and `1/2` for
//! short roots, which makes `(zeta, a^v)` equal to `1` on long and `2` on
//! short noncompact roots.

use std::collections::HashSet;
use std::fmt;

use num_traits::{One, Zero};

use crate::{rat, rat_int, rat_to_i64, Error, Rat};

/// One of the seven Hermitian symmetric families, with its parameters.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum HermitianType {
    /// su(p,q), type A_{p+q-1}; noncompact simple root alpha_p.
    Su { p: u32, q: u32 },
    /// sp(n,R), type C_n; noncompact simple root alpha_n.
    Sp { n: u32 },
    /// so*(2n), type D_n; noncompact simple root alpha_n. Requires n >= 4.
    SoStar { n: u32 },
    /// so(2,2n-1), type B_n; noncompact simple root alpha_1. Requires n >= 2.
    SoOdd { n: u32 },
    /// so(2,2n-2), type D_n; noncompact simple root alpha_1. Requires n >= 3.
    SoEven { n: u32 },
    /// e6(-14); noncompact simple root alpha_1 (Bourbaki numbering).
    E6,
    /// e7(-25); noncompact simple root alpha_7 (Bourbaki numbering).
    E7,
}

impl HermitianType {
    /// Checks the family-specific parameter minimums.
    pub fn validate(&self) -> Result<(), Error> {
        let ok = match *self {
            HermitianType::Su { p, q } => p >= 1 && q >= 1,
            HermitianType::Sp { n } => n >= 1,
            HermitianType::SoStar { n } => n >= 4,
            HermitianType::SoOdd { n } => n >= 2,
            HermitianType::SoEven { n } => n >= 3,
            HermitianType::E6 | HermitianType::E7 => true,
        };
        if ok {
            Ok(())
        } else {
            Err(Error::InvalidParams(self.to_string()))
        }
    }

    /// Rank of the complexified Lie algebra.
    pub fn rank(&self) -> usize {
        match *self {
            HermitianType::Su { p, q } => (p + q - 1) as usize,
            HermitianType::Sp { n }
            | HermitianType::SoStar { n }
            | HermitianType::SoOdd { n }
            | HermitianType::SoEven { n } => n as usize,
            HermitianType::E6 => 6,
            HermitianType::E7 => 7,
        }
    }

    /// True for the ADE families, false for sp(n,R) and so(2,2n-1).
    pub fn simply_laced(&self) -> bool {
        !matches!(self, HermitianType::Sp { .. } | HermitianType::SoOdd { .. })
    }

    /// True for the classical families (epsilon coordinates available).
    pub fn is_classical(&self) -> bool {
        !matches!(self, HermitianType::E6 | HermitianType::E7)
    }

    /// Length of an epsilon-coordinate vector, when the family has them.
    pub fn eps_dim(&self) -> Option<usize> {
        match *self {
            HermitianType::Su { p, q } => Some((p + q) as usize),
            HermitianType::Sp { n }
            | HermitianType::SoStar { n }
            | HermitianType::SoOdd { n }
            | HermitianType::SoEven { n } => Some(n as usize),
            HermitianType::E6 | HermitianType::E7 => None,
        }
    }

    /// Zero-based index of the unique noncompact simple root.
    pub fn nc_index(&self) -> usize {
        match *self {
            HermitianType::Su { p, .. } => (p - 1) as usize,
            HermitianType::Sp { n } | HermitianType::SoStar { n } => (n - 1) as usize,
            HermitianType::SoOdd { .. } | HermitianType::SoEven { .. } | HermitianType::E6 => 0,
            HermitianType::E7 => 6,
        }
    }

    /// Name of the underlying real Lie algebra, e.g. `so(2,9)` for `so_odd(5)`.
    pub fn algebra_name(&self) -> String {
        match *self {
            HermitianType::Su { p, q } => format!("su({p},{q})"),
            HermitianType::Sp { n } => format!("sp({n},R)"),
            HermitianType::SoStar { n } => format!("so*({})", 2 * n),
            HermitianType::SoOdd { n } => format!("so(2,{})", 2 * n - 1),
            HermitianType::SoEven { n } => format!("so(2,{})", 2 * n - 2),
            HermitianType::E6 => "e6(-14)".to_string(),
            HermitianType::E7 => "e7(-25)".to_string(),
        }
    }

    fn half_square_lengths(&self) -> Vec<Rat> {
        let rank = self.rank();
        match *self {
            // alpha_1..alpha_{n-1} short, alpha_n long
            HermitianType::Sp { .. } => {
                let mut d = vec![rat(1, 2); rank];
                d[rank - 1] = rat_int(1);
                d
            }
            // alpha_1..alpha_{n-1} long, alpha_n short
            HermitianType::SoOdd { .. } => {
                let mut d = vec![rat_int(1); rank];
                d[rank - 1] = rat(1, 2);
                d
            }
            _ => vec![rat_int(1); rank],
        }
    }

    fn dynkin_edges(&self) -> Vec<(usize, usize)> {
        let rank = self.rank();
        match *self {
            HermitianType::Su { .. } | HermitianType::Sp { .. } | HermitianType::SoOdd { .. } => {
                (0..rank.saturating_sub(1)).map(|i| (i, i + 1)).collect()
            }
            HermitianType::SoStar { .. } | HermitianType::SoEven { .. } => {
                let mut edges: Vec<(usize, usize)> =
                    (0..rank - 2).map(|i| (i, i + 1)).collect();
                edges.push((rank - 3, rank - 1));
                edges
            }
            HermitianType::E6 => vec![(0, 2), (2, 3), (3, 4), (4, 5), (1, 3)],
            HermitianType::E7 => vec![(0, 2), (2, 3), (3, 4), (4, 5), (1, 3), (5, 6)],
        }
    }

    fn expected_positive_root_count(&self) -> usize {
        match *self {
            HermitianType::Su { p, q } => {
                let n = (p + q) as usize;
                n * (n - 1) / 2
            }
            HermitianType::Sp { n } | HermitianType::SoOdd { n } => (n * n) as usize,
            HermitianType::SoStar { n } | HermitianType::SoEven { n } => (n * (n - 1)) as usize,
            HermitianType::E6 => 36,
            HermitianType::E7 => 63,
        }
    }

    fn expected_noncompact_count(&self) -> usize {
        match *self {
            HermitianType::Su { p, q } => (p * q) as usize,
            HermitianType::Sp { n } => (n * (n + 1) / 2) as usize,
            HermitianType::SoStar { n } => (n * (n - 1) / 2) as usize,
            HermitianType::SoOdd { n } => (2 * n - 1) as usize,
            HermitianType::SoEven { n } => (2 * n - 2) as usize,
            HermitianType::E6 => 16,
            HermitianType::E7 => 27,
        }
    }

    fn table_constants(&self) -> (u32, Rat, i64) {
        match *self {
            HermitianType::Su { p, q } => (p.min(q), rat_int(1), (p + q - 1) as i64),
            HermitianType::Sp { n } => (n, rat(1, 2), n as i64),
            HermitianType::SoStar { n } => (n / 2, rat_int(2), (2 * n - 3) as i64),
            HermitianType::SoOdd { n } => (2, rat_int(n as i64) - rat(3, 2), (2 * n - 2) as i64),
            HermitianType::SoEven { n } => (2, rat_int(n as i64 - 2), (2 * n - 3) as i64),
            HermitianType::E6 => (2, rat_int(3), 11),
            HermitianType::E7 => (3, rat_int(4), 17),
        }
    }
}

impl fmt::Display for HermitianType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            HermitianType::Su { p, q } => write!(f, "su({p},{q})"),
            HermitianType::Sp { n } => write!(f, "sp({n})"),
            HermitianType::SoStar { n } => write!(f, "so*({})", 2 * n),
            HermitianType::SoOdd { n } => write!(f, "so_odd({n})"),
            HermitianType::SoEven { n } => write!(f, "so_even({n})"),
            HermitianType::E6 => write!(f, "e6"),
            HermitianType::E7 => write!(f, "e7"),
        }
    }
}

/// Length class of a root under the `d = 1` (long) / `d = 1/2` (short)
/// normalization.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum LengthClass {
    Long,
    Short,
}

/// A positive root, stored as its simple-root coefficient vector.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Root {
    coeffs: Vec<i64>,
    length_class: LengthClass,
    is_compact: bool,
}

impl Root {
    /// Simple-root coefficients `[n_1, n_2, ...]`.
    pub fn coeffs(&self) -> &[i64] {
        &self.coeffs
    }

    /// Sum of the simple-root coefficients.
    pub fn height(&self) -> i64 {
        self.coeffs.iter().sum()
    }

    pub fn length_class(&self) -> LengthClass {
        self.length_class
    }

    pub fn is_compact(&self) -> bool {
        self.is_compact
    }

    /// Half square length: `1` for long roots, `1/2` for short roots.
    pub fn half_square_length(&self) -> Rat {
        match self.length_class {
            LengthClass::Long => rat_int(1),
            LengthClass::Short => rat(1, 2),
        }
    }

    /// Root order: `self <= other` iff `other - self` has all-nonnegative
    /// coefficients.
    pub fn le(&self, other: &Root) -> bool {
        self.coeffs.len() == other.coeffs.len()
            && self
                .coeffs
                .iter()
                .zip(other.coeffs.iter())
                .all(|(a, b)| a <= b)
    }

    /// Sort key used everywhere a deterministic element order is needed.
    pub fn sort_key(&self) -> (i64, Vec<i64>) {
        (self.height(), self.coeffs.clone())
    }
}

impl fmt::Display for Root {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, c) in self.coeffs.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, "]")
    }
}

/// An element of the dual Cartan subalgebra in exact rational
/// fundamental-weight coordinates.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Weight {
    fw: Vec<Rat>,
}

impl Weight {
    pub fn new(fw: Vec<Rat>) -> Self {
        Weight { fw }
    }

    pub fn zero(rank: usize) -> Self {
        Weight {
            fw: vec![Rat::zero(); rank],
        }
    }

    /// Coefficients in the fundamental-weight basis.
    pub fn fw(&self) -> &[Rat] {
        &self.fw
    }

    pub fn rank(&self) -> usize {
        self.fw.len()
    }

    pub fn add(&self, other: &Weight) -> Weight {
        assert_eq!(self.fw.len(), other.fw.len(), "weight rank mismatch");
        Weight {
            fw: self
                .fw
                .iter()
                .zip(other.fw.iter())
                .map(|(a, b)| a + b)
                .collect(),
        }
    }

    pub fn sub(&self, other: &Weight) -> Weight {
        assert_eq!(self.fw.len(), other.fw.len(), "weight rank mismatch");
        Weight {
            fw: self
                .fw
                .iter()
                .zip(other.fw.iter())
                .map(|(a, b)| a - b)
                .collect(),
        }
    }

    pub fn scale(&self, s: &Rat) -> Weight {
        Weight {
            fw: self.fw.iter().map(|a| a * s).collect(),
        }
    }
}

impl std::ops::Add for &Weight {
    type Output = Weight;
    fn add(self, rhs: &Weight) -> Weight {
        Weight::add(self, rhs)
    }
}

impl std::ops::Sub for &Weight {
    type Output = Weight;
    fn sub(self, rhs: &Weight) -> Weight {
        Weight::sub(self, rhs)
    }
}

/// Immutable root-system data for one family instance.
///
/// Built once by [`RootSystemData::build`]; all queries are pure.
#[derive(Debug, Clone)]
pub struct RootSystemData {
    ty: HermitianType,
    rank: usize,
    d: Vec<Rat>,
    positive_roots: Vec<Root>,
    beta: Root,
    nc_index: usize,
    rho: Weight,
    zeta: Weight,
    r: u32,
    c: Rat,
    rho_beta: i64,
}

impl RootSystemData {
    /// Constructs the root system, classifies compact/noncompact roots, and
    /// checks the structural invariants of the family.
    pub fn build(ty: HermitianType) -> Result<Self, Error> {
        ty.validate()?;
        let rank = ty.rank();
        let d = ty.half_square_lengths();
        let cartan = build_cartan(rank, &ty.dynkin_edges(), &d);
        let nc_index = ty.nc_index();

        let vectors = generate_positive_roots(rank, &cartan);
        assert_eq!(
            vectors.len(),
            ty.expected_positive_root_count(),
            "{ty}: positive root count"
        );

        let mut positive_roots: Vec<Root> = vectors
            .into_iter()
            .map(|coeffs| {
                let da = half_square_length(&coeffs, &cartan, &d);
                let length_class = if da.is_one() {
                    LengthClass::Long
                } else {
                    assert_eq!(da, rat(1, 2), "{ty}: unexpected root length");
                    LengthClass::Short
                };
                let nc_coeff = coeffs[nc_index];
                assert!(
                    nc_coeff == 0 || nc_coeff == 1,
                    "{ty}: noncompact simple coefficient must be 0 or 1, got {nc_coeff}"
                );
                Root {
                    coeffs,
                    length_class,
                    is_compact: nc_coeff == 0,
                }
            })
            .collect();
        positive_roots.sort_by_key(Root::sort_key);

        if ty.simply_laced() {
            assert!(
                positive_roots
                    .iter()
                    .all(|a| a.length_class == LengthClass::Long),
                "{ty}: simply-laced family with a short root"
            );
        }
        let noncompact = positive_roots.iter().filter(|a| !a.is_compact).count();
        assert_eq!(noncompact, ty.expected_noncompact_count(), "{ty}: |Delta(p+)|");

        // The highest root is the unique coefficientwise maximum; for the
        // Hermitian families it is noncompact.
        let beta = positive_roots
            .last()
            .expect("nonempty root system")
            .clone();
        assert!(
            positive_roots.iter().all(|a| a.le(&beta)),
            "{ty}: highest root is not a maximum"
        );
        assert!(!beta.is_compact, "{ty}: highest root must be noncompact");

        let rho = Weight::new(vec![rat_int(1); rank]);
        let mut zeta_fw = vec![Rat::zero(); rank];
        zeta_fw[nc_index] = rat_int(1);
        let zeta = Weight::new(zeta_fw);

        let (r, c, rho_beta) = ty.table_constants();
        let rs = RootSystemData {
            ty,
            rank,
            cartan,
            d,
            positive_roots,
            beta,
            nc_index,
            rho,
            zeta,
            r,
            c,
            rho_beta,
        };

        // (zeta, beta^v) = 1: the fundamental weight at the noncompact node
        // needs no rescaling in any of the seven families.
        assert!(
            rs.pairing(&rs.zeta, &rs.beta).is_one(),
            "{ty}: (zeta, beta^v) != 1"
        );
        assert_eq!(
            rs.pairing(&rs.rho, &rs.beta),
            rat_int(rs.rho_beta),
            "{ty}: (rho, beta^v) disagrees with the family constant"
        );
        // r * (rho_beta - (r-1)c) = dim p+ ties the constants to the root count.
        let r_q = rat_int(rs.r as i64);
        let dim_pplus =
            &r_q * (rat_int(rs.rho_beta) - (&r_q - rat_int(1)) * &rs.c);
        assert_eq!(
            dim_pplus,
            rat_int(rs.num_noncompact() as i64),
            "{ty}: r * z_(r-1) != |Delta(p+)|"
        );
        Ok(rs)
    }

    pub fn ty(&self) -> HermitianType {
        self.ty
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    /// Zero-based index of the noncompact simple root.
    pub fn nc_index(&self) -> usize {
        self.nc_index
    }

    pub fn positive_roots(&self) -> &[Root] {
        &self.positive_roots
    }

    /// The positive noncompact roots, in (height, coefficients) order.
    pub fn noncompact_roots(&self) -> impl Iterator<Item = &Root> {
        self.positive_roots.iter().filter(|a| !a.is_compact)
    }

    pub fn num_noncompact(&self) -> usize {
        self.noncompact_roots().count()
    }

    /// Highest (noncompact) root.
    pub fn beta(&self) -> &Root {
        &self.beta
    }

    /// Half the sum of positive roots; all-ones in the fw basis.
    pub fn rho(&self) -> &Weight {
        &self.rho
    }

    /// The weight orthogonal to the compact roots with `(zeta, beta^v) = 1`.
    pub fn zeta(&self) -> &Weight {
        &self.zeta
    }

    /// Family constants `(r, c, (rho, beta^v))`.
    pub fn constants(&self) -> (u32, Rat, i64) {
        (self.r, self.c.clone(), self.rho_beta)
    }

    /// Real rank of the symmetric space.
    pub fn r(&self) -> u32 {
        self.r
    }

    pub fn c(&self) -> &Rat {
        &self.c
    }

    pub fn rho_beta(&self) -> i64 {
        self.rho_beta
    }

    /// Smallest integer >= c.
    pub fn ceil_c(&self) -> i64 {
        rat_to_i64(&self.c.ceil())
    }

    pub fn simply_laced(&self) -> bool {
        self.ty.simply_laced()
    }

    /// The pairing `(x, a^v) = sum_j n_j (d_j / d_a) x_j` for `a = sum_j n_j alpha_j`.
    ///
    /// For a simple root `alpha_j` this is the `j`-th fw coordinate of `x`.
    pub fn pairing(&self, x: &Weight, a: &Root) -> Rat {
        assert_eq!(x.rank(), self.rank, "weight rank mismatch");
        assert_eq!(a.coeffs.len(), self.rank, "root rank mismatch");
        let mut acc = Rat::zero();
        for (j, &n) in a.coeffs.iter().enumerate() {
            if n != 0 {
                acc += rat_int(n) * &self.d[j] * &x.fw[j];
            }
        }
        acc / a.half_square_length()
    }

    /// Splits `lambda = lambda_0 + z * zeta` with `(lambda_0 + rho, beta^v) = 0`.
    ///
    /// Returns `(lambda_0, z)` where `z = (lambda + rho, beta^v)`.
    pub fn decompose(&self, lambda: &Weight) -> (Weight, Rat) {
        let z = self.pairing(&(lambda + &self.rho), &self.beta);
        let lambda0 = lambda - &self.zeta.scale(&z);
        debug_assert!(self
            .pairing(&(&lambda0 + &self.rho), &self.beta)
            .is_zero());
        (lambda0, z)
    }

    /// Epsilon vectors of the simple roots (classical families only).
    fn simple_roots_eps(&self) -> Result<Vec<Vec<Rat>>, Error> {
        let dim = self
            .ty
            .eps_dim()
            .ok_or_else(|| Error::UnsupportedFamily(self.ty.to_string()))?;
        let mut simples = Vec::with_capacity(self.rank);
        for i in 0..self.rank {
            let mut v = vec![Rat::zero(); dim];
            match self.ty {
                HermitianType::Su { .. } => {
                    v[i] = rat_int(1);
                    v[i + 1] = rat_int(-1);
                }
                HermitianType::Sp { .. } => {
                    if i + 1 < self.rank {
                        v[i] = rat_int(1);
                        v[i + 1] = rat_int(-1);
                    } else {
                        v[i] = rat_int(2);
                    }
                }
                HermitianType::SoOdd { .. } => {
                    if i + 1 < self.rank {
                        v[i] = rat_int(1);
                        v[i + 1] = rat_int(-1);
                    } else {
                        v[i] = rat_int(1);
                    }
                }
                HermitianType::SoStar { .. } | HermitianType::SoEven { .. } => {
                    if i + 1 < self.rank {
                        v[i] = rat_int(1);
                        v[i + 1] = rat_int(-1);
                    } else {
                        v[i - 1] = rat_int(1);
                        v[i] = rat_int(1);
                    }
                }
                HermitianType::E6 | HermitianType::E7 => unreachable!(),
            }
            simples.push(v);
        }
        Ok(simples)
    }

    /// Epsilon-coordinate form of a root (classical families only).
    pub fn root_eps(&self, a: &Root) -> Result<Vec<Rat>, Error> {
        let simples = self.simple_roots_eps()?;
        let dim = simples[0].len();
        let mut v = vec![Rat::zero(); dim];
        for (j, &n) in a.coeffs.iter().enumerate() {
            if n != 0 {
                for (vi, sj) in v.iter_mut().zip(simples[j].iter()) {
                    *vi += rat_int(n) * sj;
                }
            }
        }
        Ok(v)
    }

    /// Converts epsilon coordinates to fundamental-weight coordinates.
    ///
    /// For su(p,q) the input need not be traceless; the pairing-relevant part
    /// is invariant under adding a constant to all entries.
    pub fn eps_to_fw(&self, eps: &[Rat]) -> Result<Weight, Error> {
        let dim = self
            .ty
            .eps_dim()
            .ok_or_else(|| Error::UnsupportedFamily(self.ty.to_string()))?;
        if eps.len() != dim {
            return Err(Error::DimensionMismatch {
                expected: dim,
                got: eps.len(),
            });
        }
        let n = self.rank;
        let mut fw = vec![Rat::zero(); n];
        match self.ty {
            HermitianType::Su { .. } => {
                for i in 0..n {
                    fw[i] = &eps[i] - &eps[i + 1];
                }
            }
            HermitianType::Sp { .. } => {
                for i in 0..n - 1 {
                    fw[i] = &eps[i] - &eps[i + 1];
                }
                fw[n - 1] = eps[n - 1].clone();
            }
            HermitianType::SoOdd { .. } => {
                for i in 0..n - 1 {
                    fw[i] = &eps[i] - &eps[i + 1];
                }
                fw[n - 1] = &eps[n - 1] + &eps[n - 1];
            }
            HermitianType::SoStar { .. } | HermitianType::SoEven { .. } => {
                for i in 0..n - 1 {
                    fw[i] = &eps[i] - &eps[i + 1];
                }
                fw[n - 1] = &eps[n - 2] + &eps[n - 1];
            }
            HermitianType::E6 | HermitianType::E7 => unreachable!(),
        }
        Ok(Weight::new(fw))
    }

    /// Converts fundamental-weight coordinates to epsilon coordinates.
    ///
    /// For su(p,q) the traceless representative is returned.
    pub fn fw_to_eps(&self, w: &Weight) -> Result<Vec<Rat>, Error> {
        let dim = self
            .ty
            .eps_dim()
            .ok_or_else(|| Error::UnsupportedFamily(self.ty.to_string()))?;
        if w.rank() != self.rank {
            return Err(Error::DimensionMismatch {
                expected: self.rank,
                got: w.rank(),
            });
        }
        let n = self.rank;
        let f = w.fw();
        let mut eps = vec![Rat::zero(); dim];
        match self.ty {
            HermitianType::Su { .. } => {
                // x_i = x_dim + s_i with s_i the suffix sums of f; then shift
                // so the total is zero.
                let mut suffix = vec![Rat::zero(); dim];
                for i in (0..n).rev() {
                    suffix[i] = &suffix[i + 1] + &f[i];
                }
                let total: Rat = suffix.iter().fold(Rat::zero(), |acc, s| acc + s);
                let x_last = -total / rat_int(dim as i64);
                for i in 0..dim {
                    eps[i] = &suffix[i] + &x_last;
                }
            }
            HermitianType::Sp { .. } => {
                eps[n - 1] = f[n - 1].clone();
                for i in (0..n - 1).rev() {
                    eps[i] = &f[i] + &eps[i + 1];
                }
            }
            HermitianType::SoOdd { .. } => {
                eps[n - 1] = &f[n - 1] / rat_int(2);
                for i in (0..n - 1).rev() {
                    eps[i] = &f[i] + &eps[i + 1];
                }
            }
            HermitianType::SoStar { .. } | HermitianType::SoEven { .. } => {
                eps[n - 2] = (&f[n - 2] + &f[n - 1]) / rat_int(2);
                eps[n - 1] = (&f[n - 1] - &f[n - 2]) / rat_int(2);
                for i in (0..n - 2).rev() {
                    eps[i] = &f[i] + &eps[i + 1];
                }
            }
            HermitianType::E6 | HermitianType::E7 => unreachable!(),
        }
        Ok(eps)
    }
}

/// Cartan matrix entry `[i][j] = (alpha_i, alpha_j^v)` from the Dynkin edges
/// and the half square lengths.
fn build_cartan(rank: usize, edges: &[(usize, usize)], d: &[Rat]) -> Vec<Vec<i64>> {
    let mut cartan = vec![vec![0i64; rank]; rank];
    for i in 0..rank {
        cartan[i][i] = 2;
    }
    for &(i, j) in edges {
        // (alpha_i, alpha_j) = -max(d_i, d_j) for a single or double bond.
        let m = if d[i] >= d[j] { &d[i] } else { &d[j] };
        cartan[i][j] = rat_to_i64(&(-(m.clone()) / &d[j]));
        cartan[j][i] = rat_to_i64(&(-(m.clone()) / &d[i]));
    }
    cartan
}

/// All positive roots by inductive closure over root strings, as coefficient
/// vectors grouped implicitly by height.
fn generate_positive_roots(rank: usize, cartan: &[Vec<i64>]) -> Vec<Vec<i64>> {
    let mut all: HashSet<Vec<i64>> = HashSet::new();
    let mut layer: Vec<Vec<i64>> = Vec::new();
    for i in 0..rank {
        let mut v = vec![0i64; rank];
        v[i] = 1;
        all.insert(v.clone());
        layer.push(v);
    }
    let mut result: Vec<Vec<i64>> = layer.clone();
    while !layer.is_empty() {
        let mut next: Vec<Vec<i64>> = Vec::new();
        for gamma in &layer {
            for i in 0..rank {
                // (gamma, alpha_i^v)
                let s: i64 = (0..rank).map(|j| gamma[j] * cartan[j][i]).sum();
                // q = largest t with gamma - t*alpha_i still a root
                let mut q = 0i64;
                let mut v = gamma.clone();
                loop {
                    v[i] -= 1;
                    if v[i] < 0 || !all.contains(&v) {
                        break;
                    }
                    q += 1;
                }
                if q - s > 0 {
                    let mut w = gamma.clone();
                    w[i] += 1;
                    if all.insert(w.clone()) {
                        next.push(w.clone());
                        result.push(w);
                    }
                }
            }
        }
        layer = next;
    }
    result
}

/// `(a,a)/2` from the symmetrized Cartan data.
fn half_square_length(coeffs: &[i64], cartan: &[Vec<i64>], d: &[Rat]) -> Rat {
    let mut norm = Rat::zero();
    for (j, &nj) in coeffs.iter().enumerate() {
        if nj == 0 {
            continue;
        }
        for (k, &nk) in coeffs.iter().enumerate() {
            if nk == 0 {
                continue;
            }
            norm += rat_int(nj * nk * cartan[j][k]) * &d[k];
        }
    }
    norm / rat_int(2)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rat;

    fn build(ty: HermitianType) -> RootSystemData {
        RootSystemData::build(ty).expect("valid family")
    }

    fn weight_of_ints(v: &[i64]) -> Weight {
        Weight::new(v.iter().map(|&x| rat_int(x)).collect())
    }

    fn eps_of_ints(v: &[i64]) -> Vec<Rat> {
        v.iter().map(|&x| rat_int(x)).collect()
    }

    #[test]
    fn su43_counts_and_beta() {
        let rs = build(HermitianType::Su { p: 4, q: 3 });
        assert_eq!(rs.positive_roots().len(), 21);
        assert_eq!(rs.num_noncompact(), 12);
        assert_eq!(rs.beta().coeffs(), &[1, 1, 1, 1, 1, 1]);
        assert_eq!(rs.pairing(rs.rho(), rs.beta()), rat_int(6));
    }

    #[test]
    fn sp3_beta_and_rho_pairing() {
        let rs = build(HermitianType::Sp { n: 3 });
        assert_eq!(rs.beta().coeffs(), &[2, 2, 1]);
        assert_eq!(rs.pairing(rs.rho(), rs.beta()), rat_int(3));
        assert_eq!(rs.beta().length_class(), LengthClass::Long);
    }

    #[test]
    fn e7_counts_and_beta() {
        let rs = build(HermitianType::E7);
        assert_eq!(rs.positive_roots().len(), 63);
        assert_eq!(rs.num_noncompact(), 27);
        assert_eq!(rs.beta().coeffs(), &[2, 2, 3, 4, 3, 2, 1]);
    }

    #[test]
    fn e6_counts_and_beta() {
        let rs = build(HermitianType::E6);
        assert_eq!(rs.positive_roots().len(), 36);
        assert_eq!(rs.num_noncompact(), 16);
        assert_eq!(rs.beta().coeffs(), &[1, 2, 2, 3, 2, 1]);
    }

    #[test]
    fn sp6_rho_eps_and_pairing() {
        let rs = build(HermitianType::Sp { n: 6 });
        let rho_eps = rs.fw_to_eps(rs.rho()).unwrap();
        assert_eq!(rho_eps, eps_of_ints(&[6, 5, 4, 3, 2, 1]));
        assert_eq!(rs.pairing(rs.rho(), rs.beta()), rat_int(6));
    }

    #[test]
    fn su43_rho_eps_round_trip() {
        let rs = build(HermitianType::Su { p: 4, q: 3 });
        let rho_eps = rs.fw_to_eps(rs.rho()).unwrap();
        assert_eq!(rho_eps, eps_of_ints(&[3, 2, 1, 0, -1, -2, -3]));
        let back = rs.eps_to_fw(&rho_eps).unwrap();
        assert_eq!(&back, rs.rho());
    }

    #[test]
    fn su_eps_shift_invariance() {
        let rs = build(HermitianType::Su { p: 2, q: 2 });
        let a = eps_of_ints(&[5, 3, 2, 0]);
        let shifted: Vec<Rat> = a.iter().map(|x| x + rat(7, 3)).collect();
        assert_eq!(rs.eps_to_fw(&a).unwrap(), rs.eps_to_fw(&shifted).unwrap());
    }

    #[test]
    fn zeta_pairings() {
        for ty in [
            HermitianType::Su { p: 4, q: 3 },
            HermitianType::Sp { n: 6 },
            HermitianType::SoStar { n: 5 },
            HermitianType::SoOdd { n: 5 },
            HermitianType::SoEven { n: 8 },
            HermitianType::E6,
            HermitianType::E7,
        ] {
            let rs = build(ty);
            assert!(rs.pairing(rs.zeta(), rs.beta()).is_one());
            for (i, a) in rs.positive_roots().iter().enumerate() {
                if a.height() == 1 && a.is_compact() {
                    assert!(
                        rs.pairing(rs.zeta(), a).is_zero(),
                        "{ty}: (zeta, compact simple {i}) != 0"
                    );
                }
            }
        }
    }

    #[test]
    fn zeta_eps_forms() {
        let sp = build(HermitianType::Sp { n: 6 });
        assert_eq!(
            sp.fw_to_eps(sp.zeta()).unwrap(),
            eps_of_ints(&[1, 1, 1, 1, 1, 1])
        );
        let su = build(HermitianType::Su { p: 4, q: 3 });
        let expected: Vec<Rat> = vec![
            rat(3, 7),
            rat(3, 7),
            rat(3, 7),
            rat(3, 7),
            rat(-4, 7),
            rat(-4, 7),
            rat(-4, 7),
        ];
        assert_eq!(su.fw_to_eps(su.zeta()).unwrap(), expected);
    }

    #[test]
    fn decompose_su43_worked_weight() {
        let rs = build(HermitianType::Su { p: 4, q: 3 });
        let lambda0 = rs
            .eps_to_fw(&eps_of_ints(&[0, 0, 0, -20, 8, 6, 6]))
            .unwrap();
        assert!(rs
            .pairing(&(&lambda0 + rs.rho()), rs.beta())
            .is_zero());
        let (l0, z) = rs.decompose(&lambda0);
        assert!(z.is_zero());
        assert_eq!(l0, lambda0);
    }

    #[test]
    fn decompose_zero_weight() {
        let rs = build(HermitianType::SoStar { n: 6 });
        let (l0, z) = rs.decompose(&Weight::zero(rs.rank()));
        assert_eq!(z, rat_int(rs.rho_beta()));
        assert_eq!(l0, rs.zeta().scale(&rat_int(-rs.rho_beta())));
    }

    #[test]
    fn decompose_sp6_shifted() {
        let rs = build(HermitianType::Sp { n: 6 });
        let lambda0 = rs
            .eps_to_fw(&eps_of_ints(&[-6, -6, -6, -6, -10, -15]))
            .unwrap();
        let lambda = &lambda0 + &rs.zeta().scale(&rat_int(4));
        let (l0, z) = rs.decompose(&lambda);
        assert_eq!(z, rat_int(4));
        assert_eq!(l0, lambda0);
    }

    #[test]
    fn pairing_simple_roots_give_fw_coords() {
        for ty in [
            HermitianType::Su { p: 2, q: 3 },
            HermitianType::Sp { n: 4 },
            HermitianType::SoOdd { n: 3 },
            HermitianType::SoEven { n: 4 },
            HermitianType::E6,
        ] {
            let rs = build(ty);
            let x = Weight::new((0..rs.rank()).map(|i| rat(i as i64 + 1, 3)).collect());
            for a in rs.positive_roots().iter().filter(|a| a.height() == 1) {
                let j = a.coeffs().iter().position(|&c| c == 1).unwrap();
                assert_eq!(rs.pairing(&x, a), x.fw()[j], "{ty}: simple root {j}");
                assert!(rs.pairing(rs.rho(), a).is_one());
            }
        }
    }

    #[test]
    fn table_constants_spot_checks() {
        let so_star = build(HermitianType::SoStar { n: 7 });
        assert_eq!(so_star.constants(), (3, rat_int(2), 11));
        let so_odd = build(HermitianType::SoOdd { n: 4 });
        assert_eq!(so_odd.constants(), (2, rat(5, 2), 6));
        let e7 = build(HermitianType::E7);
        assert_eq!(e7.constants(), (3, rat_int(4), 17));
        let su11 = build(HermitianType::Su { p: 1, q: 1 });
        assert_eq!(su11.constants(), (1, rat_int(1), 1));
    }

    #[test]
    fn invalid_params_rejected() {
        assert!(matches!(
            RootSystemData::build(HermitianType::SoStar { n: 3 }),
            Err(Error::InvalidParams(_))
        ));
        assert!(matches!(
            RootSystemData::build(HermitianType::Su { p: 0, q: 2 }),
            Err(Error::InvalidParams(_))
        ));
        assert!(matches!(
            RootSystemData::build(HermitianType::SoEven { n: 2 }),
            Err(Error::InvalidParams(_))
        ));
    }

    #[test]
    fn eps_unsupported_for_exceptional() {
        let rs = build(HermitianType::E6);
        assert!(matches!(
            rs.fw_to_eps(rs.rho()),
            Err(Error::UnsupportedFamily(_))
        ));
        assert!(matches!(
            rs.eps_to_fw(&[]),
            Err(Error::UnsupportedFamily(_))
        ));
    }

    #[test]
    fn eps_dimension_mismatch() {
        let rs = build(HermitianType::Sp { n: 3 });
        assert!(matches!(
            rs.eps_to_fw(&eps_of_ints(&[1, 2])),
            Err(Error::DimensionMismatch { expected: 3, got: 2 })
        ));
    }

    #[test]
    fn short_roots_only_in_bc() {
        let sp = build(HermitianType::Sp { n: 4 });
        let shorts = sp
            .positive_roots()
            .iter()
            .filter(|a| a.length_class() == LengthClass::Short)
            .count();
        assert_eq!(shorts, 12); // n^2 - n long roots 2e_i excluded
        let so = build(HermitianType::SoOdd { n: 4 });
        let shorts = so
            .positive_roots()
            .iter()
            .filter(|a| a.length_class() == LengthClass::Short)
            .count();
        assert_eq!(shorts, 4); // the e_i
    }

    #[test]
    fn zeta_coroot_values_by_length() {
        let sp = build(HermitianType::Sp { n: 5 });
        for a in sp.noncompact_roots() {
            let v = sp.pairing(sp.zeta(), a);
            match a.length_class() {
                LengthClass::Long => assert!(v.is_one()),
                LengthClass::Short => assert_eq!(v, rat_int(2)),
            }
        }
    }

    #[test]
    fn zero_eps_is_zero_weight() {
        let rs = build(HermitianType::SoEven { n: 5 });
        let w = rs.eps_to_fw(&vec![Rat::zero(); 5]).unwrap();
        assert_eq!(w, Weight::zero(5));
        assert_eq!(rs.fw_to_eps(&w).unwrap(), vec![Rat::zero(); 5]);
    }

    #[test]
    fn weight_of_ints_helper_matches_fw() {
        let w = weight_of_ints(&[1, -2, 3]);
        assert_eq!(w.fw()[1], rat_int(-2));
    }
}
