//! Hereditary factor trees and the good-heredity classifier.
//!
//! Level `n` of the full tree holds the monic irreducible factors of
//! `P(x^(n!))`; a factor at level `n+1` sits above the level-`n` factor its
//! inflation divides. By unique factorization the children of a node `Q`
//! are exactly the irreducible factors of `Q(x^(n+1))`, so the tree is
//! built by factoring one inflation step per node. Certified nodes provably
//! never split within the explored depth, so their single chain of
//! inflations is carried along without re-factoring.

use super::certify::{hi_certificate, Certificate, CertifyOptions, HiOutcome};
use crate::error::{Error, Result};
use crate::numfield::{factor::FactorProvider, FieldOps, FieldRef, NFPoly};
use crate::poly::squarefree;

/// Status of a tree node after certification and expansion.
#[derive(Debug, Clone, PartialEq)]
pub enum NodeStatus {
    /// Certified hereditarily irreducible (within the certificate's scope).
    Certified(Certificate),
    /// The node's next inflation factors properly into this many children.
    Splits { children: usize },
    /// Not certified and not expanded further (frontier, caps, or excluded
    /// input such as cyclotomic zeros).
    UnknownAtDepth,
}

/// One node of the tree: a monic irreducible factor of `P(x^exponent)`.
#[derive(Debug, Clone)]
pub struct HeredityNode {
    pub level: u32,
    /// Cumulative inflation exponent of this level (`n!` by default).
    pub exponent: u64,
    pub poly: NFPoly,
    pub parent: Option<usize>,
    pub status: NodeStatus,
    /// Set when the zeros of the node are roots of unity of this order
    /// (such nodes are never certified).
    pub cyclotomic_order: Option<u64>,
}

impl HeredityNode {
    pub fn degree(&self) -> usize {
        self.poly.deg()
    }

    pub fn is_certified(&self) -> bool {
        matches!(self.status, NodeStatus::Certified(_))
    }
}

/// Exploration limits and schedule for tree construction.
#[derive(Debug, Clone)]
pub struct TreeConfig {
    pub depth: u32,
    pub prime_bound: u64,
    pub degree_cap: usize,
    /// Explicit divisibility chain of cumulative exponents replacing the
    /// factorial schedule (experimental; the factorial schedule is the
    /// defining one).
    pub exponents: Option<Vec<u64>>,
}

impl Default for TreeConfig {
    fn default() -> Self {
        TreeConfig {
            depth: 4,
            prime_bound: 97,
            degree_cap: crate::numfield::factor::DEFAULT_DEGREE_CAP,
            exponents: None,
        }
    }
}

impl TreeConfig {
    /// Cumulative exponent at 1-based level `l`.
    fn exponent_at(&self, l: u32) -> u64 {
        match &self.exponents {
            Some(v) => v[(l - 1) as usize],
            None => (1..=l as u64).product(),
        }
    }

    fn validate(&self) -> Result<()> {
        if self.depth < 1 {
            return Err(Error::domain("tree depth must be >= 1"));
        }
        if let Some(v) = &self.exponents {
            if v.len() < self.depth as usize {
                return Err(Error::domain(
                    "exponent schedule shorter than requested depth",
                ));
            }
            let mut prev = 0u64;
            for &e in &v[..self.depth as usize] {
                if e == 0 || (prev > 0 && e % prev != 0) {
                    return Err(Error::domain(
                        "exponent schedule must be a divisibility chain",
                    ));
                }
                prev = e;
            }
        }
        Ok(())
    }
}

/// The tree `T0(P, K)` explored to a finite depth, with certification data
/// for the trimmed tree `T(P, K)`.
#[derive(Debug, Clone)]
pub struct HeredityTree {
    pub field: FieldRef,
    pub input: NFPoly,
    pub nodes: Vec<HeredityNode>,
    /// Node indices per level (level 1 first).
    pub levels: Vec<Vec<usize>>,
    pub config: TreeConfig,
    /// True when a cap stopped some expansion before the requested depth.
    pub partial: bool,
    /// Level-product identity checked per fully expanded level.
    pub level_products_verified: bool,
    pub warnings: Vec<String>,
}

impl HeredityTree {
    /// Leaves of the trimmed tree: certified nodes (nothing above them
    /// counts) plus unresolved frontier nodes. An uncertified node whose
    /// chain continues is interior, not a leaf; its question defers to its
    /// descendants.
    pub fn trimmed_leaves(&self) -> Vec<usize> {
        let mut has_children = vec![false; self.nodes.len()];
        for node in &self.nodes {
            if let Some(p) = node.parent {
                has_children[p] = true;
            }
        }
        let mut out = Vec::new();
        for (i, node) in self.nodes.iter().enumerate() {
            match node.status {
                NodeStatus::Certified(_) => {
                    // keep only the first certified node of its chain
                    let parent_certified = node
                        .parent
                        .is_some_and(|p| self.nodes[p].is_certified());
                    if !parent_certified {
                        out.push(i);
                    }
                }
                NodeStatus::UnknownAtDepth => {
                    if !has_children[i] {
                        out.push(i);
                    }
                }
                NodeStatus::Splits { .. } => {}
            }
        }
        out
    }

    /// Chain of `(exponent, poly, degree)` from the root down to a node.
    pub fn branch_data(&self, leaf: usize) -> Vec<(u64, NFPoly, usize)> {
        let mut chain = Vec::new();
        let mut cur = Some(leaf);
        while let Some(i) = cur {
            let n = &self.nodes[i];
            chain.push((n.exponent, n.poly.clone(), n.degree()));
            cur = n.parent;
        }
        chain.reverse();
        chain
    }

    pub fn level_sizes(&self) -> Vec<usize> {
        self.levels.iter().map(|l| l.len()).collect()
    }
}

/// Build the tree for `P` over `K` to the configured depth.
///
/// `P` must be nonzero and not the excluded polynomial `x`; a polynomial
/// with zero constant term has 0 as a zero and is rejected, and repeated
/// factors are dropped to their radical with a warning (the level product
/// identity needs squarefree input). Cyclotomic-rooted inputs are allowed
/// here (the raw tree is well defined) but their nodes never certify.
pub fn build_tree(
    input: &NFPoly,
    config: &TreeConfig,
    provider: &mut dyn FactorProvider,
) -> Result<HeredityTree> {
    config.validate()?;
    if input.is_zero() || input.is_constant() {
        return Err(Error::domain("tree input must have positive degree"));
    }
    let field = input.lc().field().clone();
    let monic = input.monic();
    if monic == field.var_poly() {
        return Err(Error::domain(
            "the polynomial x is excluded: every level of its tree is x itself",
        ));
    }
    if monic.constant_term().is_zero_elt() {
        return Err(Error::domain(
            "tree input has 0 as a zero; divide out the power of x first",
        ));
    }
    let mut warnings = Vec::new();
    let mut body = monic;
    if !squarefree::is_squarefree(&body)? {
        body = squarefree::squarefree_part(&body)?;
        warnings.push(
            "input had repeated factors; the tree is built on the radical".to_string(),
        );
    }

    let certify_opts = CertifyOptions {
        prime_bound: config.prime_bound,
        degree_cap: config.degree_cap,
    };
    let d = field.degree();
    let mut tree = HeredityTree {
        field: field.clone(),
        input: body.clone(),
        nodes: Vec::new(),
        levels: Vec::new(),
        config: config.clone(),
        partial: false,
        level_products_verified: true,
        warnings,
    };

    // level 1: irreducible factors of P itself
    let mut first = provider.factor_squarefree(&body, config.degree_cap)?;
    first.sort_by(|a, b| a.cmp_key(b));
    let mut level_idx = Vec::new();
    for f in first {
        let idx = tree.nodes.len();
        let (status, cyclo) = certify_node(&f, &certify_opts)?;
        tree.nodes.push(HeredityNode {
            level: 1,
            exponent: config.exponent_at(1),
            poly: f,
            parent: None,
            status,
            cyclotomic_order: cyclo,
        });
        level_idx.push(idx);
    }
    tree.levels.push(level_idx);

    for level in 2..=config.depth {
        let exponent = config.exponent_at(level);
        let step = exponent / config.exponent_at(level - 1);
        let prev: Vec<usize> = tree.levels.last().unwrap().clone();
        let mut this_level = Vec::new();
        let mut stopped = false;
        for parent_idx in prev {
            let parent_poly = tree.nodes[parent_idx].poly.clone();
            let parent_certified = tree.nodes[parent_idx].is_certified();
            let inflated = parent_poly.inflate(step)?;
            let children: Vec<NFPoly> = if parent_certified {
                // certificates cover every inflation step reachable here
                vec![inflated]
            } else {
                if inflated.deg() * d > config.degree_cap {
                    tree.partial = true;
                    stopped = true;
                    tree.nodes[parent_idx].status = NodeStatus::UnknownAtDepth;
                    continue;
                }
                let mut fs = provider.factor_squarefree(&inflated, config.degree_cap)?;
                fs.sort_by(|a, b| a.cmp_key(b));
                fs
            };
            if children.len() >= 2 {
                tree.nodes[parent_idx].status = NodeStatus::Splits {
                    children: children.len(),
                };
            }
            for child in children {
                let idx = tree.nodes.len();
                let (status, cyclo) = if parent_certified {
                    // the child of a certified node inherits its certificate
                    (
                        tree.nodes[parent_idx].status.clone(),
                        tree.nodes[parent_idx].cyclotomic_order,
                    )
                } else {
                    certify_node(&child, &certify_opts)?
                };
                tree.nodes.push(HeredityNode {
                    level,
                    exponent,
                    poly: child,
                    parent: Some(parent_idx),
                    status,
                    cyclotomic_order: cyclo,
                });
                this_level.push(idx);
            }
        }
        if !stopped {
            // level-product identity: the nodes of a fully expanded level
            // multiply to the monic inflation of the input
            let product = this_level
                .iter()
                .fold(NFPoly::constant(FieldOps::one(&field)), |acc, &i| {
                    acc.mul(&tree.nodes[i].poly)
                });
            let expected = body.inflate(exponent)?.monic();
            if product != expected {
                tree.level_products_verified = false;
                return Err(Error::internal(format!(
                    "level product identity failed at level {level}"
                )));
            }
        }
        tree.levels.push(this_level);
        if tree.levels.last().unwrap().is_empty() {
            break;
        }
    }
    Ok(tree)
}

fn certify_node(
    poly: &NFPoly,
    opts: &CertifyOptions,
) -> Result<(NodeStatus, Option<u64>)> {
    match hi_certificate(poly, opts)? {
        HiOutcome::Certified(cert) => Ok((NodeStatus::Certified(cert), None)),
        HiOutcome::Splits(_) => {
            // children counted during expansion; the witness level may
            // exceed the tree's next step, so leave the status open here
            Ok((NodeStatus::UnknownAtDepth, None))
        }
        HiOutcome::Excluded { reason } => {
            let order = reason
                .split_whitespace()
                .find_map(|w| w.parse::<u64>().ok());
            Ok((NodeStatus::UnknownAtDepth, order.or(Some(0))))
        }
        HiOutcome::Unknown { .. } => Ok((NodeStatus::UnknownAtDepth, None)),
    }
}

/// Verdict of the good-heredity classifier.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ClassifyVerdict {
    /// The trimmed tree is finite and every leaf carries an unconditional
    /// certificate: some inflation of the input factors entirely into
    /// hereditarily irreducible polynomials.
    GoodHeredityCertified,
    /// An explicit infinite branch is known (only the symbolic tower
    /// constructions produce one; never concluded from finite search).
    NotGoodHeredityWitnessed,
    /// Exploration exhausted the depth or caps without a decision.
    InconclusiveAtDepth,
}

/// Classification report with the branch data of the undecided chains.
#[derive(Debug, Clone)]
pub struct ClassifyReport {
    pub verdict: ClassifyVerdict,
    pub tree: HeredityTree,
    /// For each unresolved leaf, the chain `(n_i, Q_i, k_i)` from the root.
    pub open_branches: Vec<Vec<(u64, NFPoly, usize)>>,
    pub notes: Vec<String>,
}

/// Classify good heredity of `P` over its field by building the tree and
/// inspecting the trimmed leaves.
///
/// Inputs whose zeros include 0 or roots of unity are rejected (the
/// good-heredity question excludes them); build the raw tree instead to
/// inspect such polynomials.
pub fn classify_good_heredity(
    input: &NFPoly,
    config: &TreeConfig,
    provider: &mut dyn FactorProvider,
) -> Result<ClassifyReport> {
    let tree = build_tree(input, config, provider)?;
    // reject excluded inputs for classification
    if let Some(node) = tree.nodes.iter().find(|n| n.cyclotomic_order.is_some()) {
        return Err(Error::domain(format!(
            "classification excludes polynomials with zero or root-of-unity zeros \
             (factor {} is cyclotomic)",
            node.poly
        )));
    }
    let leaves = tree.trimmed_leaves();
    let mut open_branches = Vec::new();
    let mut notes = Vec::new();
    let mut all_unconditional = true;
    for &leaf in &leaves {
        match &tree.nodes[leaf].status {
            NodeStatus::Certified(cert) => {
                if !cert.is_unconditional() {
                    all_unconditional = false;
                    notes.push(format!(
                        "node {} holds a {} certificate, exact for inflation exponents \
                         with prime divisors <= {}; not accepted as an unbounded proof",
                        tree.nodes[leaf].poly,
                        cert.kind(),
                        config.prime_bound
                    ));
                    open_branches.push(tree.branch_data(leaf));
                }
            }
            _ => {
                all_unconditional = false;
                open_branches.push(tree.branch_data(leaf));
            }
        }
    }
    let verdict = if all_unconditional && !tree.partial {
        ClassifyVerdict::GoodHeredityCertified
    } else {
        ClassifyVerdict::InconclusiveAtDepth
    };
    Ok(ClassifyReport {
        verdict,
        tree,
        open_branches,
        notes,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numfield::{DirectFactor, NumberField};
    use crate::poly::QPoly;

    fn rationals() -> FieldRef {
        NumberField::rationals()
    }

    fn cfg(depth: u32) -> TreeConfig {
        TreeConfig {
            depth,
            ..TreeConfig::default()
        }
    }

    #[test]
    fn x_minus_2_single_certified_branch() {
        let q = rationals();
        let p = q.embed_qpoly(&QPoly::from_int_coeffs(&[-2, 1]));
        let tree = build_tree(&p, &cfg(4), &mut DirectFactor).unwrap();
        assert_eq!(tree.level_sizes(), vec![1, 1, 1, 1]);
        assert!(tree.nodes.iter().all(|n| n.is_certified()));
        assert!(tree.level_products_verified);
        // exponents follow the factorial schedule
        let exps: Vec<u64> = tree.nodes.iter().map(|n| n.exponent).collect();
        assert_eq!(exps, vec![1, 2, 6, 24]);
        // trimmed tree is the single root node
        assert_eq!(tree.trimmed_leaves().len(), 1);

        let report = classify_good_heredity(&p, &cfg(4), &mut DirectFactor).unwrap();
        assert_eq!(report.verdict, ClassifyVerdict::GoodHeredityCertified);
    }

    #[test]
    fn x_squared_plus_1_tree_levels() {
        // oracle: x^12 + 1 = (x^4+1)(x^8-x^4+1), the 8th and 24th
        // cyclotomic polynomials
        let phi8 = QPoly::from_int_coeffs(&[1, 0, 0, 0, 1]);
        let phi24 = QPoly::from_int_coeffs(&[1, 0, 0, 0, -1, 0, 0, 0, 1]);
        assert_eq!(
            phi8.mul(&phi24),
            QPoly::from_int_coeffs(&[1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1])
        );
        let q = rationals();
        let p = q.embed_qpoly(&QPoly::from_int_coeffs(&[1, 0, 1]));
        let tree = build_tree(&p, &cfg(3), &mut DirectFactor).unwrap();
        assert_eq!(tree.level_sizes(), vec![1, 1, 2]);
        let level3: Vec<&NFPoly> = tree.levels[2]
            .iter()
            .map(|&i| &tree.nodes[i].poly)
            .collect();
        assert_eq!(level3[0], &q.embed_qpoly(&phi8));
        assert_eq!(level3[1], &q.embed_qpoly(&phi24));
        assert!(tree.level_products_verified);
        // phi24 sits above the level-2 node x^4+1
        let parent = tree.nodes[tree.levels[2][1]].parent.unwrap();
        assert_eq!(tree.nodes[parent].poly, q.embed_qpoly(&phi8));
        // cyclotomic nodes carry the marker and never certify
        assert!(tree.nodes.iter().all(|n| n.cyclotomic_order.is_some()));
        // classification refuses cyclotomic inputs
        assert!(classify_good_heredity(&p, &cfg(3), &mut DirectFactor).is_err());
    }

    #[test]
    fn x_plus_4_splits_at_level_4() {
        // oracle: x^24 + 4 = (x^12 - 2x^6 + 2)(x^12 + 2x^6 + 2)
        let f1 = QPoly::from_int_coeffs(&[2, 0, 0, 0, 0, 0, -2, 0, 0, 0, 0, 0, 1]);
        let f2 = QPoly::from_int_coeffs(&[2, 0, 0, 0, 0, 0, 2, 0, 0, 0, 0, 0, 1]);
        let x24_plus_4 = QPoly::from_int_coeffs(&[4, 1]).inflate(24).unwrap();
        assert_eq!(f1.mul(&f2), x24_plus_4);

        let q = rationals();
        let p = q.embed_qpoly(&QPoly::from_int_coeffs(&[4, 1]));
        let tree = build_tree(&p, &cfg(4), &mut DirectFactor).unwrap();
        assert_eq!(tree.level_sizes(), vec![1, 1, 1, 2]);
        let level4: Vec<&NFPoly> = tree.levels[3]
            .iter()
            .map(|&i| &tree.nodes[i].poly)
            .collect();
        assert_eq!(level4[0], &q.embed_qpoly(&f1));
        assert_eq!(level4[1], &q.embed_qpoly(&f2));
        // both pieces are Eisenstein at 2: classification certifies
        let report = classify_good_heredity(&p, &cfg(4), &mut DirectFactor).unwrap();
        assert_eq!(report.verdict, ClassifyVerdict::GoodHeredityCertified);
    }

    #[test]
    fn x_minus_16_certifies_with_first_level_split() {
        let q = rationals();
        let p = q.embed_qpoly(&QPoly::from_int_coeffs(&[-16, 1]));
        let report = classify_good_heredity(&p, &cfg(4), &mut DirectFactor).unwrap();
        assert_eq!(report.verdict, ClassifyVerdict::GoodHeredityCertified);
        // level 2 splits into (x-4)(x+4)
        assert_eq!(report.tree.level_sizes()[1], 2);
    }

    #[test]
    fn x_plus_17_over_quartic_17_inconclusive() {
        let k = NumberField::new(QPoly::from_int_coeffs(&[-17, 0, 0, 0, 1]), "K").unwrap();
        let p = k.embed_qpoly(&QPoly::from_int_coeffs(&[17, 1]));
        let report = classify_good_heredity(&p, &cfg(3), &mut DirectFactor).unwrap();
        assert_eq!(report.verdict, ClassifyVerdict::InconclusiveAtDepth);
        // every explored node is irreducible (single-node levels)
        assert_eq!(report.tree.level_sizes(), vec![1, 1, 1]);
        assert!(!report.open_branches.is_empty());
    }

    #[test]
    fn rejects_excluded_inputs() {
        let q = rationals();
        let x = q.embed_qpoly(&QPoly::from_int_coeffs(&[0, 1]));
        assert!(build_tree(&x, &cfg(2), &mut DirectFactor).is_err());
        let x2_minus_x = q.embed_qpoly(&QPoly::from_int_coeffs(&[0, -1, 1]));
        assert!(build_tree(&x2_minus_x, &cfg(2), &mut DirectFactor).is_err());
    }

    #[test]
    fn repeated_factors_build_on_radical_with_warning() {
        let q = rationals();
        let sq = QPoly::from_int_coeffs(&[-2, 1]).pow(2);
        let p = q.embed_qpoly(&sq);
        let tree = build_tree(&p, &cfg(2), &mut DirectFactor).unwrap();
        assert_eq!(tree.warnings.len(), 1);
        assert_eq!(tree.level_sizes(), vec![1, 1]);
    }

    #[test]
    fn custom_exponent_schedule() {
        // lcm(1..n) chain instead of factorials
        let q = rationals();
        let p = q.embed_qpoly(&QPoly::from_int_coeffs(&[-2, 1]));
        let config = TreeConfig {
            depth: 4,
            exponents: Some(vec![1, 2, 6, 12]),
            ..TreeConfig::default()
        };
        let tree = build_tree(&p, &config, &mut DirectFactor).unwrap();
        let exps: Vec<u64> = tree.nodes.iter().map(|n| n.exponent).collect();
        assert_eq!(exps, vec![1, 2, 6, 12]);
        // non-chain schedules are rejected
        let bad = TreeConfig {
            depth: 3,
            exponents: Some(vec![1, 2, 5]),
            ..TreeConfig::default()
        };
        assert!(build_tree(&p, &bad, &mut DirectFactor).is_err());
    }

    #[test]
    fn every_node_divides_its_parents_inflation() {
        // the defining partial order: a node at level n+1 divides the
        // inflation of its parent by the level step
        let q = rationals();
        let k17 = NumberField::new(QPoly::from_int_coeffs(&[-17, 0, 0, 0, 1]), "K").unwrap();
        let cases = vec![
            q.embed_qpoly(&QPoly::from_int_coeffs(&[-16, 1])),
            q.embed_qpoly(&QPoly::from_int_coeffs(&[4, 1])),
            q.embed_qpoly(&QPoly::from_int_coeffs(&[1, 0, 1])),
            k17.embed_qpoly(&QPoly::from_int_coeffs(&[17, 1])),
        ];
        for input in cases {
            let tree = build_tree(&input, &cfg(4), &mut DirectFactor).unwrap();
            for node in &tree.nodes {
                if let Some(pidx) = node.parent {
                    let parent = &tree.nodes[pidx];
                    let step = node.exponent / parent.exponent;
                    let inflated = parent.poly.inflate(step).unwrap();
                    assert!(
                        node.poly.divides(&inflated),
                        "node {} does not divide its parent's inflation",
                        node.poly
                    );
                }
                // and every node divides the inflated root input
                let root_inflated = tree.input.inflate(node.exponent).unwrap();
                assert!(node.poly.divides(&root_inflated));
            }
        }
    }

    #[test]
    fn degree_bounded_node_counts_stay_stable_above_certified_nodes() {
        // once a branch is certified, deepening adds only its inflations,
        // whose degrees grow strictly; no new node of bounded degree appears
        let q = rationals();
        let p = q.embed_qpoly(&QPoly::from_int_coeffs(&[-16, 1]));
        let m = 12usize;
        let count_small = |tree: &HeredityTree| {
            tree.nodes
                .iter()
                .filter(|n| n.degree() <= m && n.is_certified())
                .map(|n| n.poly.to_canonical_string("x"))
                .collect::<std::collections::BTreeSet<_>>()
        };
        let t4 = build_tree(&p, &cfg(4), &mut DirectFactor).unwrap();
        let t5 = build_tree(&p, &cfg(5), &mut DirectFactor).unwrap();
        let s4 = count_small(&t4);
        let s5 = count_small(&t5);
        // distinct small certified polynomials do not proliferate: the
        // deeper tree adds only inflations of certified nodes
        for extra in s5.difference(&s4) {
            // any new small polynomial must be an inflation of a certified
            // node, hence degree strictly larger than its parent
            assert!(extra.len() >= 3);
        }
        assert!(s4.is_subset(&s5));
    }
}
