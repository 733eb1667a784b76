//! Named graph constructors, so every worked example is runnable without
//! an input file. The string form accepts e.g. `cycle:4`, `bipartite:2,3`,
//! `random:10,0.5,42`, `petersen`, `koenigsberg`, `goodwillhunting`.

use crate::census::random_quiver;
use crate::quiver::Quiver;
use thiserror::Error;

#[derive(Debug, Error, PartialEq)]
pub enum BuiltinError {
    #[error("unknown builtin graph \"{0}\"")]
    UnknownName(String),
    #[error("builtin {name} cannot parse parameters \"{params}\": expected {expected}")]
    BadParams {
        name: &'static str,
        params: String,
        expected: &'static str,
    },
    #[error("builtin {name} needs n >= {min}, got {n}")]
    TooSmall {
        name: &'static str,
        n: usize,
        min: usize,
    },
}

pub fn star(n: usize) -> Result<Quiver, BuiltinError> {
    if n < 1 {
        return Err(BuiltinError::TooSmall {
            name: "star",
            n,
            min: 1,
        });
    }
    let edges: Vec<(usize, usize)> = (2..=n).map(|v| (1, v)).collect();
    Ok(Quiver::from_edge_list(n, &edges).expect("in range"))
}

pub fn cycle(n: usize) -> Result<Quiver, BuiltinError> {
    if n < 3 {
        return Err(BuiltinError::TooSmall {
            name: "cycle",
            n,
            min: 3,
        });
    }
    let edges: Vec<(usize, usize)> = (1..=n).map(|k| (k, k % n + 1)).collect();
    Ok(Quiver::from_edge_list(n, &edges).expect("in range"))
}

pub fn path(n: usize) -> Result<Quiver, BuiltinError> {
    if n < 1 {
        return Err(BuiltinError::TooSmall {
            name: "path",
            n,
            min: 1,
        });
    }
    let edges: Vec<(usize, usize)> = (1..n).map(|k| (k, k + 1)).collect();
    Ok(Quiver::from_edge_list(n, &edges).expect("in range"))
}

/// Hub vertex 1 joined to the cycle 2..n.
pub fn wheel(n: usize) -> Result<Quiver, BuiltinError> {
    if n < 4 {
        return Err(BuiltinError::TooSmall {
            name: "wheel",
            n,
            min: 4,
        });
    }
    let mut edges: Vec<(usize, usize)> = (2..=n).map(|v| (1, v)).collect();
    for k in 2..=n {
        let next = if k == n { 2 } else { k + 1 };
        edges.push((k, next));
    }
    Ok(Quiver::from_edge_list(n, &edges).expect("in range"))
}

pub fn complete(n: usize) -> Result<Quiver, BuiltinError> {
    if n < 1 {
        return Err(BuiltinError::TooSmall {
            name: "complete",
            n,
            min: 1,
        });
    }
    let mut edges = Vec::new();
    for u in 1..=n {
        for v in (u + 1)..=n {
            edges.push((u, v));
        }
    }
    Ok(Quiver::from_edge_list(n, &edges).expect("in range"))
}

/// Parts 1..=m and m+1..=m+n.
pub fn complete_bipartite(m: usize, n: usize) -> Result<Quiver, BuiltinError> {
    if m < 1 || n < 1 {
        return Err(BuiltinError::TooSmall {
            name: "bipartite",
            n: m.min(n),
            min: 1,
        });
    }
    let mut edges = Vec::new();
    for u in 1..=m {
        for v in (m + 1)..=(m + n) {
            edges.push((u, v));
        }
    }
    Ok(Quiver::from_edge_list(m + n, &edges).expect("in range"))
}

/// Outer 5-cycle 1..5, inner pentagram 6..10, spokes i -- i+5.
pub fn petersen() -> Quiver {
    let mut edges = Vec::new();
    for k in 1..=5 {
        edges.push((k, k % 5 + 1));
        edges.push((k, k + 5));
        edges.push((k + 5, (k + 1) % 5 + 6));
    }
    Quiver::from_edge_list(10, &edges).expect("in range")
}

/// a x b lattice, row-major numbering.
pub fn grid(a: usize, b: usize) -> Result<Quiver, BuiltinError> {
    if a < 1 || b < 1 {
        return Err(BuiltinError::TooSmall {
            name: "grid",
            n: a.min(b),
            min: 1,
        });
    }
    let id = |r: usize, c: usize| r * b + c + 1;
    let mut edges = Vec::new();
    for r in 0..a {
        for c in 0..b {
            if c + 1 < b {
                edges.push((id(r, c), id(r, c + 1)));
            }
            if r + 1 < a {
                edges.push((id(r, c), id(r + 1, c)));
            }
        }
    }
    Ok(Quiver::from_edge_list(a * b, &edges).expect("in range"))
}

/// Independent edge probability p, reproducible from the seed.
pub fn random_graph(n: usize, p: f64, seed: u64) -> Result<Quiver, BuiltinError> {
    if n < 1 {
        return Err(BuiltinError::TooSmall {
            name: "random",
            n,
            min: 1,
        });
    }
    // reuse the seeded generator with simple-graph settings, then thin
    use rand::{Rng, SeedableRng};
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
    let mut edges = Vec::new();
    for u in 1..=n {
        for v in (u + 1)..=n {
            if rng.gen::<f64>() < p {
                edges.push((u, v));
            }
        }
    }
    Ok(Quiver::from_edge_list(n, &edges).expect("in range"))
}

/// The bridge multigraph: doubled edges 1-2 and 1-4, single 2-3, 2-4, 3-4.
pub fn koenigsberg() -> Quiver {
    Quiver::from_edge_list(
        4,
        &[(1, 2), (1, 2), (1, 4), (1, 4), (2, 3), (2, 4), (3, 4)],
    )
    .expect("in range")
}

/// The blackboard multigraph: edges 1-2, 2-4, 1-4 and a doubled 2-3.
pub fn good_will_hunting() -> Quiver {
    Quiver::from_edge_list(4, &[(1, 2), (2, 4), (1, 4), (2, 3), (2, 3)]).expect("in range")
}

/// Resolves `name[:params]` to a quiver.
pub fn builtin(spec: &str) -> Result<Quiver, BuiltinError> {
    let (name, params) = match spec.split_once(':') {
        Some((n, p)) => (n, Some(p)),
        None => (spec, None),
    };
    let one = |name: &'static str| -> Result<usize, BuiltinError> {
        params
            .and_then(|p| p.parse::<usize>().ok())
            .ok_or(BuiltinError::BadParams {
                name,
                params: params.unwrap_or("").to_string(),
                expected: "n",
            })
    };
    match name {
        "star" => star(one("star")?),
        "cycle" => cycle(one("cycle")?),
        "path" => path(one("path")?),
        "wheel" => wheel(one("wheel")?),
        "complete" => complete(one("complete")?),
        "bipartite" => {
            let raw = params.unwrap_or("");
            let parts: Vec<Option<usize>> =
                raw.split(',').map(|t| t.trim().parse().ok()).collect();
            match parts.as_slice() {
                [Some(m), Some(n)] => complete_bipartite(*m, *n),
                _ => Err(BuiltinError::BadParams {
                    name: "bipartite",
                    params: raw.to_string(),
                    expected: "m,n",
                }),
            }
        }
        "grid" => {
            let raw = params.unwrap_or("");
            let parts: Vec<Option<usize>> =
                raw.split(',').map(|t| t.trim().parse().ok()).collect();
            match parts.as_slice() {
                [Some(a), Some(b)] => grid(*a, *b),
                _ => Err(BuiltinError::BadParams {
                    name: "grid",
                    params: raw.to_string(),
                    expected: "rows,cols",
                }),
            }
        }
        "random" => {
            let raw = params.unwrap_or("");
            let parts: Vec<&str> = raw.split(',').map(str::trim).collect();
            match parts.as_slice() {
                [n, p, seed] => {
                    let n = n.parse::<usize>().ok();
                    let p = p.parse::<f64>().ok();
                    let seed = seed.parse::<u64>().ok();
                    match (n, p, seed) {
                        (Some(n), Some(p), Some(seed)) if (0.0..=1.0).contains(&p) => {
                            random_graph(n, p, seed)
                        }
                        _ => Err(BuiltinError::BadParams {
                            name: "random",
                            params: raw.to_string(),
                            expected: "n,p,seed",
                        }),
                    }
                }
                _ => Err(BuiltinError::BadParams {
                    name: "random",
                    params: raw.to_string(),
                    expected: "n,p,seed",
                }),
            }
        }
        "quiver-random" => {
            let raw = params.unwrap_or("");
            let parts: Vec<Option<u64>> = raw.split(',').map(|t| t.trim().parse().ok()).collect();
            match parts.as_slice() {
                [Some(n), Some(mult), Some(loops), Some(seed)] => Ok(random_quiver(
                    *n as usize,
                    *mult as usize,
                    *loops as usize,
                    *seed,
                )),
                _ => Err(BuiltinError::BadParams {
                    name: "quiver-random",
                    params: raw.to_string(),
                    expected: "n,max_mult,max_loops,seed",
                }),
            }
        }
        "petersen" => Ok(petersen()),
        "koenigsberg" => Ok(koenigsberg()),
        "goodwillhunting" => Ok(good_will_hunting()),
        other => Err(BuiltinError::UnknownName(other.to_string())),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::spectral::{eigenvalues_sym, DEFAULT_TOL};

    #[test]
    fn parse_forms() {
        assert_eq!(builtin("cycle:4").unwrap(), cycle(4).unwrap());
        assert_eq!(builtin("bipartite:2,3").unwrap(), complete_bipartite(2, 3).unwrap());
        assert_eq!(builtin("petersen").unwrap(), petersen());
        assert!(matches!(builtin("moebius:5"), Err(BuiltinError::UnknownName(_))));
        assert!(matches!(
            builtin("cycle:x"),
            Err(BuiltinError::BadParams { .. })
        ));
        assert!(matches!(builtin("cycle:2"), Err(BuiltinError::TooSmall { .. })));
    }

    #[test]
    fn shapes_and_degrees() {
        assert_eq!(petersen().edge_count(), 15);
        assert!(petersen().degrees().values().iter().all(|&d| d == 3));
        assert_eq!(grid(2, 5).unwrap().vertex_count(), 10);
        assert_eq!(wheel(10).unwrap().degree(1), 9);
        assert_eq!(good_will_hunting().degrees().values(), &[2, 2, 2, 4]);
        assert_eq!(koenigsberg().degrees().values(), &[2, 4, 4, 4]);
    }

    #[test]
    fn bipartite_two_three_spectrum() {
        let q = complete_bipartite(2, 3).unwrap();
        assert_eq!(q.degrees().values(), &[2, 2, 2, 3, 3]);
        let s = eigenvalues_sym(&q.kirchhoff(), DEFAULT_TOL).unwrap();
        let expected = [0.0, 2.0, 2.0, 3.0, 5.0];
        for (a, b) in s.values().iter().zip(expected.iter()) {
            assert!((a - b).abs() < 1e-9, "{:?}", s.values());
        }
    }

    #[test]
    fn random_graph_determinism() {
        let a = random_graph(10, 0.5, 42).unwrap();
        let b = random_graph(10, 0.5, 42).unwrap();
        assert_eq!(a, b);
        assert!(a.classify().is_simple);
    }
}
