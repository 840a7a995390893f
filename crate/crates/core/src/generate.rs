//! Seeded random complexes, configurations and centers.
//!
//! All generators draw from a caller-supplied RNG; [`rng`] gives the
//! crate's standard seeded stream.

use std::collections::{BTreeMap, BTreeSet};

use rand::seq::SliceRandom;
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::complex::{DeltaComplex, RawComplex, RawSimplex};
use crate::snc::{
    derive_cone_extension, BlowUpCenter, CenterKind, ComponentMeta, SncConfiguration,
};

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

const LABELS: &str = "abcdefghijklmnopqrstuvwxyz";

fn simplex_id(names: &[&str]) -> String {
    names.concat()
}

/// Downward closure of `facets` (vertex index sets), as a simplicial
/// complex on `names` with ids formed by concatenating vertex names.
pub fn simplicial_from_facets(names: &[&str], facets: &[Vec<usize>]) -> DeltaComplex {
    let mut faces: BTreeSet<Vec<usize>> = BTreeSet::new();
    for f in facets {
        let mut f = f.clone();
        f.sort_unstable();
        f.dedup();
        for mask in 1u32..(1u32 << f.len()) {
            faces.insert(
                (0..f.len())
                    .filter(|b| mask & (1 << b) != 0)
                    .map(|b| f[b])
                    .collect(),
            );
        }
    }
    let id = |face: &[usize]| simplex_id(&face.iter().map(|&i| names[i]).collect::<Vec<_>>());
    let mut raw = RawComplex::new();
    for face in &faces {
        if face.len() == 1 {
            raw.vertices.push(names[face[0]].to_owned());
        } else {
            let facets = (0..face.len())
                .map(|drop| {
                    let rest: Vec<usize> = face
                        .iter()
                        .enumerate()
                        .filter(|(k, _)| *k != drop)
                        .map(|(_, &v)| v)
                        .collect();
                    id(&rest)
                })
                .collect();
            raw.simplices.push(RawSimplex {
                id: id(face),
                facets,
            });
        }
    }
    DeltaComplex::from_raw(&raw).expect("closures of vertex sets are simplicial complexes")
}

/// The full simplex on `names`.
pub fn full_simplex(names: &[&str]) -> DeltaComplex {
    simplicial_from_facets(names, &[(0..names.len()).collect()])
}

/// Shape of a random simplicial complex.
#[derive(Debug, Clone, Copy)]
pub struct ComplexShape {
    pub vertices: usize,
    pub max_dim: usize,
    pub max_facets: usize,
    /// Upper bound on the total number of simplices.
    pub max_simplices: usize,
}

impl ComplexShape {
    pub fn new(vertices: usize, max_dim: usize, max_facets: usize, max_simplices: usize) -> Self {
        assert!(vertices >= 1 && vertices <= LABELS.len());
        ComplexShape {
            vertices,
            max_dim,
            max_facets,
            max_simplices,
        }
    }
}

/// A simplicial complex on single-letter vertices: random facets are added
/// while the simplex count stays within the bound.
pub fn random_simplicial_complex<R: Rng>(rng: &mut R, shape: ComplexShape) -> DeltaComplex {
    let names: Vec<&str> = (0..shape.vertices).map(|i| &LABELS[i..i + 1]).collect();
    let n_facets = rng.gen_range(1..=shape.max_facets.max(1));
    let mut facets: Vec<Vec<usize>> = Vec::new();
    let mut current = simplicial_from_facets(&names, &facets);
    for _ in 0..n_facets {
        let dim = rng.gen_range(0..=shape.max_dim.min(shape.vertices - 1));
        let mut pool: Vec<usize> = (0..shape.vertices).collect();
        pool.shuffle(rng);
        let mut f: Vec<usize> = pool[..=dim].to_vec();
        f.sort_unstable();
        facets.push(f);
        let next = simplicial_from_facets(&names, &facets);
        if next.len() > shape.max_simplices {
            facets.pop();
            continue;
        }
        current = next;
    }
    current
}

/// A simplicial complex with extra parallel simplices: copies of a simplex
/// sharing its facets, occasionally with copies of its cofaces attached to
/// the new copy. The result is a genuine Δ-complex.
pub fn random_delta_complex<R: Rng>(
    rng: &mut R,
    shape: ComplexShape,
    copies: usize,
) -> DeltaComplex {
    let base = random_simplicial_complex(rng, shape);
    let mut raw = base.to_raw();
    let mut current = base;
    for k in 0..copies {
        let positive: Vec<usize> = (0..current.len())
            .filter(|&i| current.simplex(i).dim() > 0)
            .collect();
        let Some(&pick) = positive.choose(rng) else {
            break;
        };
        let s = current.simplex(pick);
        let copy_id = format!("{}'{k}", s.id());
        let facet_ids: Vec<String> = s
            .facets()
            .iter()
            .map(|&f| current.id_of(f).as_str().to_owned())
            .collect();
        raw.simplices.push(RawSimplex {
            id: copy_id.clone(),
            facets: facet_ids,
        });
        for &c in current.cofacets(pick) {
            if rng.gen_bool(0.5) {
                let cs = current.simplex(c);
                let facets = cs
                    .facets()
                    .iter()
                    .map(|&f| {
                        if f == pick {
                            copy_id.clone()
                        } else {
                            current.id_of(f).as_str().to_owned()
                        }
                    })
                    .collect();
                raw.simplices.push(RawSimplex {
                    id: format!("{}'{k}", cs.id()),
                    facets,
                });
            }
        }
        current = DeltaComplex::from_raw(&raw).expect("parallel copies keep gluing consistent");
    }
    current
}

/// Stratum data for a simplicial dual complex.
///
/// Divisor regime: `dim D_τ = n − 1 − dim τ` in an ambient space of
/// dimension `n = dim Σ + 2`. Variety regime: each vertex gets a random
/// component dimension and higher strata shrink by a random amount.
pub fn random_configuration<R: Rng>(
    rng: &mut R,
    dual: DeltaComplex,
    divisor_regime: bool,
) -> SncConfiguration {
    let top = dual.dim().unwrap_or(0);
    let ambient = top + 2;
    let mut meta: BTreeMap<String, ComponentMeta> = BTreeMap::new();
    let mut dims = vec![0usize; dual.len()];
    for (i, s) in dual.simplices().iter().enumerate() {
        let dim = if divisor_regime {
            ambient - 1 - s.dim()
        } else if s.dim() == 0 {
            rng.gen_range(1..ambient)
        } else {
            let face_min = s
                .facets()
                .iter()
                .map(|&f| dims[f])
                .min()
                .expect("positive dimension");
            let base = s
                .vertices()
                .iter()
                .map(|&v| dims[v])
                .min()
                .expect("has vertices");
            let shrink = rng.gen_range(0..=1);
            base.saturating_sub(s.dim() + shrink).min(face_min)
        };
        dims[i] = dim;
        meta.insert(
            s.id().as_str().to_owned(),
            ComponentMeta {
                name: format!("D_{}", s.id()),
                dim,
            },
        );
    }
    SncConfiguration::new(dual, meta, ambient, divisor_regime)
        .expect("generated strata respect the bounds")
}

/// A center of the requested kind valid for `cfg`, with explicit incidence
/// data where the kind leaves a choice. Simplices are tried in random order
/// until one supports a valid center.
pub fn random_center<R: Rng>(
    rng: &mut R,
    cfg: &SncConfiguration,
    kind: CenterTag,
    new_vertex: &str,
) -> Option<BlowUpCenter> {
    let dual = cfg.dual();
    let mut ids: Vec<&str> = dual.simplices().iter().map(|s| s.id().as_str()).collect();
    ids.shuffle(rng);
    let positive = |id: &&str| cfg.meta(id).is_some_and(|m| m.dim > 0);
    for sigma in ids.iter().copied() {
        let center = match kind {
            CenterTag::Intersection => intersection_center(rng, cfg, sigma, new_vertex),
            CenterTag::Inside => {
                if !positive(&sigma) {
                    continue;
                }
                let star = dual.star(sigma).expect("own simplex").labels();
                let mut chosen: Vec<&str> = star
                    .iter()
                    .map(String::as_str)
                    .filter(positive)
                    .filter(|_| rng.gen_bool(0.5))
                    .collect();
                chosen.push(sigma);
                let center =
                    BlowUpCenter::inside(sigma, new_vertex).with_delta(closure_of(cfg, chosen));
                let stratum = cfg.meta(sigma).expect("configured").dim;
                center.with_center_dim(rng.gen_range(0..stratum))
            }
            CenterTag::Transverse => {
                let chosen: Vec<&str> = ids
                    .iter()
                    .copied()
                    .filter(positive)
                    .filter(|_| rng.gen_bool(0.3))
                    .collect();
                BlowUpCenter::new(CenterKind::Transverse, new_vertex)
                    .with_delta(closure_of(cfg, chosen))
            }
        };
        if derive_cone_extension(cfg, &center).is_ok() {
            return Some(center);
        }
    }
    None
}

fn closure_of(cfg: &SncConfiguration, ids: Vec<&str>) -> Vec<String> {
    let dual = cfg.dual();
    dual.closure(&dual.subset(ids).expect("own simplices"))
        .expect("own subset")
        .labels()
}

/// In the variety regime `Δ⁰` is the star of `σ_C`, the stars of point
/// strata it meets, and a few random stars inside the closed star.
fn intersection_center<R: Rng>(
    rng: &mut R,
    cfg: &SncConfiguration,
    sigma: &str,
    new_vertex: &str,
) -> BlowUpCenter {
    let center = BlowUpCenter::intersection(sigma, new_vertex);
    if cfg.divisor_regime() {
        return center;
    }
    let dual = cfg.dual();
    let closed = dual.closed_star(sigma).expect("own simplex");
    let mut delta0: BTreeSet<String> = dual
        .star(sigma)
        .expect("own simplex")
        .labels()
        .into_iter()
        .collect();
    for id in closed.iter() {
        let point = cfg.meta(id.as_str()).is_some_and(|m| m.dim == 0);
        if point || rng.gen_bool(0.3) {
            delta0.extend(dual.star(id.as_str()).expect("own simplex").labels());
        }
    }
    center.with_delta0(delta0)
}

/// Center kinds without their data, for generators.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CenterTag {
    Intersection,
    Inside,
    Transverse,
}
