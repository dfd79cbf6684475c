use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Arrow {
    pub name: String,
    pub source: usize,
    pub target: usize,
}

/// A finite quiver with named vertices and arrows. Ids are positions.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Quiver {
    vertices: Vec<String>,
    arrows: Vec<Arrow>,
}

impl Quiver {
    pub fn new(vertices: &[&str], arrows: &[(&str, &str, &str)]) -> Result<Self> {
        let vertices: Vec<String> = vertices.iter().map(|v| v.to_string()).collect();
        let mut q = Quiver {
            vertices,
            arrows: Vec::new(),
        };
        for &(name, s, t) in arrows {
            let source = q.vertex(s)?;
            let target = q.vertex(t)?;
            q.arrows.push(Arrow {
                name: name.to_string(),
                source,
                target,
            });
        }
        Ok(q)
    }

    /// Two vertices, `a1, a2: v0 → v1` and `b1, b2: v1 → v0`.
    pub fn conifold() -> Self {
        Quiver::new(
            &["v0", "v1"],
            &[
                ("a1", "v0", "v1"),
                ("a2", "v0", "v1"),
                ("b1", "v1", "v0"),
                ("b2", "v1", "v0"),
            ],
        )
        .unwrap()
    }

    /// The ℤ/2 cover of the conifold quiver: a square
    /// `v00 → v10 → v01 → v11 → v00` with primed labels on the second sheet.
    pub fn double_cover() -> Self {
        Quiver::new(
            &["v00", "v10", "v01", "v11"],
            &[
                ("a1", "v00", "v10"),
                ("a2", "v00", "v10"),
                ("b1", "v10", "v01"),
                ("b2", "v10", "v01"),
                ("a1'", "v01", "v11"),
                ("a2'", "v01", "v11"),
                ("b1'", "v11", "v00"),
                ("b2'", "v11", "v00"),
            ],
        )
        .unwrap()
    }

    /// The conifold quiver with a framing vertex `inf` and `i: inf → v0`.
    pub fn framed_conifold() -> Self {
        Quiver::new(
            &["v0", "v1", "inf"],
            &[
                ("a1", "v0", "v1"),
                ("a2", "v0", "v1"),
                ("b1", "v1", "v0"),
                ("b2", "v1", "v0"),
                ("i", "inf", "v0"),
            ],
        )
        .unwrap()
    }

    pub fn vertex(&self, name: &str) -> Result<usize> {
        self.vertices
            .iter()
            .position(|v| v == name)
            .ok_or_else(|| Error::UnknownVertex(name.to_string()))
    }

    pub fn arrow(&self, name: &str) -> Result<usize> {
        self.arrows
            .iter()
            .position(|a| a.name == name)
            .ok_or_else(|| Error::UnknownArrow(name.to_string()))
    }

    pub fn vertices(&self) -> &[String] {
        &self.vertices
    }

    pub fn arrows(&self) -> &[Arrow] {
        &self.arrows
    }

    pub fn arrow_info(&self, id: usize) -> &Arrow {
        &self.arrows[id]
    }

    /// All paths of the given length from `from` to `to`, in a fixed order.
    pub fn paths(&self, from: usize, to: usize, len: usize) -> Vec<Path> {
        let mut layer = vec![Path::trivial(from)];
        for _ in 0..len {
            let mut next = Vec::new();
            for p in &layer {
                for (id, a) in self.arrows.iter().enumerate() {
                    if a.source == p.target {
                        let mut arrows = Vec::with_capacity(p.len() + 1);
                        arrows.push(id);
                        arrows.extend_from_slice(&p.arrows);
                        next.push(Path {
                            arrows,
                            source: p.source,
                            target: a.target,
                        });
                    }
                }
            }
            layer = next;
        }
        layer.retain(|p| p.target == to);
        layer
    }
}

/// A path `aₙ ⋯ a₁`, stored in written order: `arrows[0]` is traversed last.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Path {
    arrows: Vec<usize>,
    source: usize,
    target: usize,
}

impl Path {
    /// The idempotent `e_v`.
    pub fn trivial(v: usize) -> Self {
        Path {
            arrows: Vec::new(),
            source: v,
            target: v,
        }
    }

    pub fn from_arrows(q: &Quiver, arrows: Vec<usize>) -> Result<Self> {
        let (Some(&first), Some(&last)) = (arrows.first(), arrows.last()) else {
            return Err(Error::EmptyInput("a nontrivial path needs at least one arrow"));
        };
        for w in arrows.windows(2) {
            if q.arrows[w[0]].source != q.arrows[w[1]].target {
                return Err(Error::NotCyclic(format!(
                    "{} cannot follow {}",
                    q.arrows[w[0]].name, q.arrows[w[1]].name
                )));
            }
        }
        Ok(Path {
            source: q.arrows[last].source,
            target: q.arrows[first].target,
            arrows,
        })
    }

    pub fn from_names<S: AsRef<str>>(q: &Quiver, names: &[S]) -> Result<Self> {
        let ids = names
            .iter()
            .map(|n| q.arrow(n.as_ref()))
            .collect::<Result<Vec<_>>>()?;
        Path::from_arrows(q, ids)
    }

    pub fn arrows(&self) -> &[usize] {
        &self.arrows
    }

    pub fn len(&self) -> usize {
        self.arrows.len()
    }

    pub fn is_empty(&self) -> bool {
        self.arrows.is_empty()
    }

    pub fn source(&self) -> usize {
        self.source
    }

    pub fn target(&self) -> usize {
        self.target
    }

    /// `self · other`: first traverse `other`, then `self`.
    pub fn concat(&self, other: &Path) -> Option<Path> {
        if self.source != other.target {
            return None;
        }
        let mut arrows = self.arrows.clone();
        arrows.extend_from_slice(&other.arrows);
        Some(Path {
            arrows,
            source: other.source,
            target: self.target,
        })
    }

    pub fn render(&self, q: &Quiver) -> String {
        if self.arrows.is_empty() {
            return format!("e_{}", q.vertices[self.source]);
        }
        self.arrows
            .iter()
            .map(|&a| q.arrows[a].name.as_str())
            .collect::<Vec<_>>()
            .join(" ")
    }
}
