//! Block decomposition at relation vertices, gluing of orders, and
//! admissible sequences of local structures.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::algebra::{AlgebraSpec, BasicModule, Interval, Vertex};
use crate::error::{Error, Result};
use crate::order::PartialOrder;
use crate::qhs::{order_from_tilting, LabeledTilting};
use crate::tree::{apex_labeled_tilting, apex_of_order, apex_of_tilting, apex_order, BinaryTree};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum BlockKind {
    /// No relations inside.
    Path,
    /// Every interior vertex is a relation.
    Bang,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Block {
    pub kind: BlockKind,
    #[serde(with = "range")]
    pub range: (Vertex, Vertex),
}

impl Block {
    pub fn start(&self) -> Vertex {
        self.range.0
    }

    pub fn end(&self) -> Vertex {
        self.range.1
    }

    pub fn contains(&self, v: Vertex) -> bool {
        self.range.0 <= v && v <= self.range.1
    }
}

impl fmt::Display for Block {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let kind = match self.kind {
            BlockKind::Path => "path",
            BlockKind::Bang => "bang",
        };
        write!(f, "{kind}[{},{}]", self.range.0, self.range.1)
    }
}

mod range {
    use serde::{Deserialize, Deserializer, Serialize, Serializer};

    use crate::algebra::Vertex;

    pub fn serialize<S: Serializer>(r: &(Vertex, Vertex), s: S) -> Result<S::Ok, S::Error> {
        [r.0, r.1].serialize(s)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<(Vertex, Vertex), D::Error> {
        let [a, b] = <[Vertex; 2]>::deserialize(d)?;
        if a > b {
            return Err(serde::de::Error::custom(format!(
                "range [{a},{b}] is reversed"
            )));
        }
        Ok((a, b))
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BlockDecomposition {
    pub blocks: Vec<Block>,
    pub cuts: Vec<Vertex>,
}

/// Cuts at both ends of every maximal run of consecutive relations.
pub fn block_decomposition(alg: &AlgebraSpec) -> BlockDecomposition {
    let rel = alg.relations();
    let mut cuts = Vec::new();
    let mut runs = Vec::new();
    let mut i = 0;
    while i < rel.len() {
        let mut j = i;
        while j + 1 < rel.len() && rel[j + 1] == rel[j] + 1 {
            j += 1;
        }
        cuts.push(rel[i]);
        if j > i {
            cuts.push(rel[j]);
            runs.push((rel[i], rel[j]));
        }
        i = j + 1;
    }
    let mut points = vec![1];
    points.extend(&cuts);
    points.push(alg.n());
    let blocks = points
        .windows(2)
        .map(|w| {
            let kind = if runs.contains(&(w[0], w[1])) {
                BlockKind::Bang
            } else {
                BlockKind::Path
            };
            Block {
                kind,
                range: (w[0], w[1]),
            }
        })
        .collect();
    BlockDecomposition { blocks, cuts }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GluingConditions {
    pub delta_ok: bool,
    pub nabla_ok: bool,
}

/// Conditions at the glue vertex `v` for orders on `[s, v]` and `[v, t]`.
///
/// Delta: `v - 1 < v` on the left forces `v < v + 1` on the right.
/// Nabla: `v + 1 < v` on the right forces `v < v - 1` on the left.
pub fn gluing_conditions(left: &PartialOrder, right: &PartialOrder, v: Vertex) -> GluingConditions {
    debug_assert!(left.end() == v && right.start() == v);
    let has_left = left.start() < v;
    let has_right = right.end() > v;
    let l_up = has_left && left.less(v - 1, v);
    let l_down = has_left && left.less(v, v - 1);
    let r_up = has_right && right.less(v, v + 1);
    let r_down = has_right && right.less(v + 1, v);
    GluingConditions {
        delta_ok: !l_up || r_up,
        nabla_ok: !r_down || l_down,
    }
}

/// Local quasi-hereditary structure of one block.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum LocalStructure {
    Path {
        #[serde(with = "range")]
        range: (Vertex, Vertex),
        tree: BinaryTree,
    },
    Bang {
        #[serde(with = "range")]
        range: (Vertex, Vertex),
        apex: Vertex,
    },
}

impl LocalStructure {
    pub fn block(&self) -> Block {
        match self {
            LocalStructure::Path { range, .. } => Block {
                kind: BlockKind::Path,
                range: *range,
            },
            LocalStructure::Bang { range, .. } => Block {
                kind: BlockKind::Bang,
                range: *range,
            },
        }
    }

    /// Checks that the tree labels or the apex fit the range.
    pub fn check(&self) -> Result<()> {
        match self {
            LocalStructure::Path { range, tree } => tree.check_range(range.0, range.1),
            LocalStructure::Bang { range, apex } => apex_order(range.0, range.1, *apex).map(|_| ()),
        }
    }

    pub fn order(&self) -> Result<PartialOrder> {
        self.check()?;
        match self {
            LocalStructure::Path { tree, .. } => Ok(tree.to_order()),
            LocalStructure::Bang { range, apex } => apex_order(range.0, range.1, *apex),
        }
    }

    /// `(j, T(j))` over the block.
    pub fn labeled_tilting(&self) -> Result<Vec<(Vertex, Interval)>> {
        self.check()?;
        match self {
            LocalStructure::Path { tree, .. } => Ok(tree.labeled_tilting()),
            LocalStructure::Bang { range, apex } => apex_labeled_tilting(range.0, range.1, *apex),
        }
    }

    pub fn tilting(&self) -> Result<BasicModule> {
        Ok(self
            .labeled_tilting()?
            .into_iter()
            .map(|(_, m)| m)
            .collect())
    }

    /// The local structure with the given tilting module over `block`.
    pub fn from_tilting(block: Block, t: &BasicModule) -> Result<LocalStructure> {
        let (s, e) = block.range;
        Ok(match block.kind {
            BlockKind::Path => LocalStructure::Path {
                range: block.range,
                tree: BinaryTree::from_tilting(s, e, t)?,
            },
            BlockKind::Bang => LocalStructure::Bang {
                range: block.range,
                apex: apex_of_tilting(s, e, t)?,
            },
        })
    }

    /// The local structure with the given minimal adapted order over `block`.
    pub fn from_order(block: Block, order: &PartialOrder) -> Result<LocalStructure> {
        Ok(match block.kind {
            BlockKind::Path => LocalStructure::Path {
                range: block.range,
                tree: BinaryTree::from_order(order)?,
            },
            BlockKind::Bang => LocalStructure::Bang {
                range: block.range,
                apex: apex_of_order(order)?,
            },
        })
    }

    /// Every local structure on `block`.
    pub fn all(block: Block) -> Vec<LocalStructure> {
        let (s, e) = block.range;
        match block.kind {
            BlockKind::Path => BinaryTree::all(s, e)
                .into_iter()
                .map(|tree| LocalStructure::Path {
                    range: block.range,
                    tree,
                })
                .collect(),
            BlockKind::Bang => (s..=e)
                .map(|apex| LocalStructure::Bang {
                    range: block.range,
                    apex,
                })
                .collect(),
        }
    }
}

impl fmt::Display for LocalStructure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            LocalStructure::Path { tree, .. } => write!(f, "{} tree {tree}", self.block()),
            LocalStructure::Bang { apex, .. } => write!(f, "{} apex {apex}", self.block()),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct AdmissibleSequence(pub Vec<LocalStructure>);

impl AdmissibleSequence {
    pub fn blocks(&self) -> Vec<Block> {
        self.0.iter().map(LocalStructure::block).collect()
    }
}

/// The glued order and tilting module of a valid sequence.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Assembly {
    pub order: PartialOrder,
    pub tilting: LabeledTilting,
}

fn inadmissible(msg: String) -> Error {
    Error::InadmissibleSequence(msg)
}

/// Checks the block structure, local validity and the compatibility at every cut.
pub fn validate(alg: &AlgebraSpec, seq: &AdmissibleSequence) -> Result<()> {
    let dec = block_decomposition(alg);
    if seq.blocks() != dec.blocks {
        return Err(inadmissible(format!(
            "blocks {} do not match the decomposition {}",
            seq.blocks()
                .iter()
                .map(Block::to_string)
                .collect::<Vec<_>>()
                .join(" "),
            dec.blocks
                .iter()
                .map(Block::to_string)
                .collect::<Vec<_>>()
                .join(" ")
        )));
    }
    let orders = seq
        .0
        .iter()
        .map(LocalStructure::order)
        .collect::<Result<Vec<_>>>()?;
    // orientation of the arrow v -> v + 1 inside a local order
    let up = |o: &PartialOrder, v: Vertex| o.less(v, v + 1);
    for (i, local) in seq.0.iter().enumerate() {
        match local {
            LocalStructure::Bang {
                range: (s, t),
                apex,
            } => {
                let left_up = up(&orders[i - 1], s - 1);
                let right_up = up(&orders[i + 1], *t);
                let ok = match (left_up, right_up) {
                    (true, true) => apex == s,
                    (false, true) => true,
                    (false, false) => apex == t,
                    (true, false) => false,
                };
                if !ok {
                    return Err(inadmissible(format!(
                        "apex {apex} on [{s},{t}] with {} {} {s} and {t} {} {}",
                        s - 1,
                        if left_up { "<" } else { ">" },
                        if right_up { "<" } else { ">" },
                        t + 1
                    )));
                }
            }
            LocalStructure::Path { range: (s, _), .. } => {
                if i == 0 || !matches!(seq.0[i - 1], LocalStructure::Path { .. }) {
                    continue;
                }
                let v = *s;
                if up(&orders[i - 1], v - 1) && !up(&orders[i], v) {
                    return Err(inadmissible(format!(
                        "{} < {v} on the left but {v} > {} on the right",
                        v - 1,
                        v + 1
                    )));
                }
            }
        }
    }
    Ok(())
}

/// Validates and glues the local orders and tilting modules.
pub fn assemble(alg: &AlgebraSpec, seq: &AdmissibleSequence) -> Result<Assembly> {
    validate(alg, seq)?;
    let mut order = seq.0[0].order()?;
    for local in &seq.0[1..] {
        order = order.glue(&local.order()?)?;
    }
    let mut labels: Vec<Option<Interval>> = vec![None; alg.n()];
    for local in &seq.0 {
        for (j, m) in local.labeled_tilting()? {
            let slot = &mut labels[j - 1];
            *slot = Some(match *slot {
                None => m,
                Some(prev) => {
                    let merged = Interval::new(prev.top.min(m.top), prev.socle.max(m.socle));
                    if !alg.is_valid(merged) {
                        return Err(inadmissible(format!(
                            "pieces {prev} and {m} of T({j}) do not fuse"
                        )));
                    }
                    merged
                }
            });
        }
    }
    let labels = labels
        .into_iter()
        .map(|m| m.expect("blocks cover every vertex"))
        .collect();
    Ok(Assembly {
        order,
        tilting: LabeledTilting { labels },
    })
}

/// Restricts the labeled summands of `t` to each block and reads off the local structures.
pub fn admissible_from_tilting(alg: &AlgebraSpec, t: &BasicModule) -> Result<AdmissibleSequence> {
    let labeled = order_from_tilting(alg, t)?.labeled;
    let dec = block_decomposition(alg);
    let locals = dec
        .blocks
        .iter()
        .map(|b| {
            let local: BasicModule = (b.start()..=b.end())
                .filter_map(|j| labeled.label(j).restrict(b.start(), b.end()))
                .collect();
            LocalStructure::from_tilting(*b, &local)
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(AdmissibleSequence(locals))
}

/// Restricts a minimal adapted order to each block.
pub fn admissible_from_order(
    alg: &AlgebraSpec,
    order: &PartialOrder,
) -> Result<AdmissibleSequence> {
    let dec = block_decomposition(alg);
    let locals = dec
        .blocks
        .iter()
        .map(|b| LocalStructure::from_order(*b, &order.restrict(b.start(), b.end())?))
        .collect::<Result<Vec<_>>>()?;
    Ok(AdmissibleSequence(locals))
}

/// The local tilting modules `{ T(j) restricted to the block : j in the block }`.
pub fn local_tiltings(alg: &AlgebraSpec, t: &BasicModule) -> Result<Vec<BasicModule>> {
    admissible_from_tilting(alg, t)?
        .0
        .iter()
        .map(LocalStructure::tilting)
        .collect()
}

/// Every valid admissible sequence, by brute force over local structures.
pub fn all_admissible_sequences(alg: &AlgebraSpec) -> Vec<AdmissibleSequence> {
    let dec = block_decomposition(alg);
    let mut out = vec![Vec::new()];
    for b in &dec.blocks {
        let options = LocalStructure::all(*b);
        out = out
            .into_iter()
            .flat_map(|prefix| {
                options.iter().map(move |o| {
                    let mut p = prefix.clone();
                    p.push(o.clone());
                    p
                })
            })
            .collect();
    }
    out.into_iter()
        .map(AdmissibleSequence)
        .filter(|s| validate(alg, s).is_ok())
        .collect()
}
