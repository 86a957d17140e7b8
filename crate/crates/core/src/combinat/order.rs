//! Total orders on colored vertices that extend the order within each color.

use std::fmt;

use rand::seq::SliceRandom;
use rand::Rng;

use super::complex::CVertex;
use super::graph::{Side, Vertex};
use super::CombinatError;

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct VertexOrder {
    sizes: Vec<usize>,
    seq: Vec<CVertex>,
    pos: Vec<Vec<usize>>,
}

impl VertexOrder {
    /// Validates that `seq` lists every vertex once and that each color
    /// appears in increasing index order.
    pub fn new(sizes: Vec<usize>, seq: Vec<CVertex>) -> Result<Self, CombinatError> {
        let mut pos: Vec<Vec<usize>> = sizes.iter().map(|&n| vec![usize::MAX; n]).collect();
        let mut next = vec![0usize; sizes.len()];
        for (p, &(c, i)) in seq.iter().enumerate() {
            if c >= sizes.len() || i >= sizes[c] {
                return Err(CombinatError::BadOrder(format!("unknown vertex {}:{}", c + 1, i + 1)));
            }
            if i != next[c] {
                return Err(CombinatError::BadOrder(format!(
                    "vertex {}:{} out of place within its color",
                    c + 1,
                    i + 1
                )));
            }
            next[c] += 1;
            pos[c][i] = p;
        }
        if next != sizes {
            return Err(CombinatError::BadOrder("order does not list every vertex".into()));
        }
        Ok(Self { sizes, seq, pos })
    }

    /// Builds an order by choosing, at each step, which color comes next.
    fn from_color_sequence(sizes: Vec<usize>, colors: impl IntoIterator<Item = usize>) -> Self {
        let mut next = vec![0usize; sizes.len()];
        let seq = colors
            .into_iter()
            .map(|c| {
                next[c] += 1;
                (c, next[c] - 1)
            })
            .collect();
        Self::new(sizes, seq).expect("color sequence yields a valid order")
    }

    /// The first `slots[c]` vertices of each color, color by color, then
    /// the rest interleaved round-robin.
    pub fn default_admissible(sizes: &[usize], slots: &[usize]) -> Self {
        let head: Vec<usize> = sizes.iter().enumerate().map(|(c, &n)| n.min(slot(slots, c))).collect();
        let mut colors: Vec<usize> = head.iter().enumerate().flat_map(|(c, &h)| std::iter::repeat_n(c, h)).collect();
        let mut left: Vec<usize> = sizes.iter().zip(&head).map(|(n, h)| n - h).collect();
        while left.iter().any(|&x| x > 0) {
            for (c, x) in left.iter_mut().enumerate() {
                if *x > 0 {
                    *x -= 1;
                    colors.push(c);
                }
            }
        }
        Self::from_color_sequence(sizes.to_vec(), colors)
    }

    /// Default `(k, l)`-admissible order on a graph's vertices.
    pub fn for_graph(a_size: usize, b_size: usize, k: usize, l: usize) -> Self {
        Self::default_admissible(&[a_size, b_size], &[k, l])
    }

    /// Uniformly random interleaving of the color classes.
    pub fn random<R: Rng + ?Sized>(sizes: &[usize], rng: &mut R) -> Self {
        let mut colors: Vec<usize> =
            sizes.iter().enumerate().flat_map(|(c, &n)| std::iter::repeat_n(c, n)).collect();
        colors.shuffle(rng);
        Self::from_color_sequence(sizes.to_vec(), colors)
    }

    /// Random order in which the first `slots[c]` vertices of every color
    /// form an initial segment.
    pub fn random_admissible<R: Rng + ?Sized>(sizes: &[usize], slots: &[usize], rng: &mut R) -> Self {
        let head: Vec<usize> = sizes.iter().enumerate().map(|(c, &n)| n.min(slot(slots, c))).collect();
        let mut front: Vec<usize> = head.iter().enumerate().flat_map(|(c, &h)| std::iter::repeat_n(c, h)).collect();
        let mut back: Vec<usize> = sizes
            .iter()
            .zip(&head)
            .enumerate()
            .flat_map(|(c, (n, h))| std::iter::repeat_n(c, n - h))
            .collect();
        front.shuffle(rng);
        back.shuffle(rng);
        front.extend(back);
        Self::from_color_sequence(sizes.to_vec(), front)
    }

    pub fn sizes(&self) -> &[usize] {
        &self.sizes
    }

    pub fn seq(&self) -> &[CVertex] {
        &self.seq
    }

    #[inline]
    pub fn position(&self, v: CVertex) -> usize {
        self.pos[v.0][v.1]
    }

    pub fn graph_position(&self, v: Vertex) -> usize {
        self.position((v.side.color(), v.index))
    }

    /// Whether the first `slots[c]` vertices of each color form an initial
    /// segment of the order.
    pub fn is_admissible(&self, slots: &[usize]) -> bool {
        let head: usize = self.sizes.iter().enumerate().map(|(c, &n)| n.min(slot(slots, c))).sum();
        self.seq[..head].iter().all(|&(c, i)| i < slot(slots, c))
    }

    /// The order on the cone over color `color`: a new vertex 0 of that
    /// color comes first and the old vertices of the color shift up by one.
    pub fn cone(&self, color: usize) -> Self {
        let mut sizes = self.sizes.clone();
        sizes[color] += 1;
        let mut seq = vec![(color, 0)];
        seq.extend(self.seq.iter().map(|&(c, i)| if c == color { (c, i + 1) } else { (c, i) }));
        Self::new(sizes, seq).expect("cone order is valid")
    }

    pub fn cone_graph(&self, side: Side) -> Self {
        self.cone(side.color())
    }

    /// All of `self` before all of `other`, with `other`'s colors placed
    /// after `self`'s. Matches the palette of `BalancedComplex::join`.
    pub fn concat(&self, other: &VertexOrder) -> Self {
        let shift = self.sizes.len();
        let mut sizes = self.sizes.clone();
        sizes.extend_from_slice(&other.sizes);
        let mut seq = self.seq.clone();
        seq.extend(other.seq.iter().map(|&(c, i)| (c + shift, i)));
        Self::new(sizes, seq).expect("concatenated order is valid")
    }

    /// Parses a graph order such as `1 1' 2 2' 3`: plain numbers are
    /// A-vertices, primed numbers B-vertices, 1-based. Commas also separate.
    pub fn parse_graph(s: &str, a_size: usize, b_size: usize) -> Result<Self, CombinatError> {
        let seq = tokens(s)
            .map(|t| {
                let (num, color) = match t.strip_suffix('\'') {
                    Some(n) => (n, 1),
                    None => (t, 0),
                };
                parse_index(num, t).map(|i| (color, i))
            })
            .collect::<Result<Vec<_>, _>>()?;
        Self::new(vec![a_size, b_size], seq)
    }

    /// Parses a complex order of `color:index` tokens, both 1-based.
    pub fn parse_complex(s: &str, sizes: &[usize]) -> Result<Self, CombinatError> {
        let seq = tokens(s)
            .map(|t| {
                let (c, i) = t
                    .split_once(':')
                    .ok_or_else(|| CombinatError::BadOrder(format!("expected color:index, got {t:?}")))?;
                Ok((parse_index(c, t)?, parse_index(i, t)?))
            })
            .collect::<Result<Vec<_>, CombinatError>>()?;
        Self::new(sizes.to_vec(), seq)
    }
}

fn slot(slots: &[usize], c: usize) -> usize {
    slots.get(c).copied().unwrap_or(0)
}

fn tokens(s: &str) -> impl Iterator<Item = &str> {
    s.split(|ch: char| ch == ',' || ch.is_whitespace()).filter(|t| !t.is_empty())
}

fn parse_index(num: &str, token: &str) -> Result<usize, CombinatError> {
    match num.parse::<usize>() {
        Ok(n) if n >= 1 => Ok(n - 1),
        _ => Err(CombinatError::BadOrder(format!("bad vertex token {token:?}"))),
    }
}

impl fmt::Display for VertexOrder {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let graph_like = self.sizes.len() == 2;
        for (k, &(c, i)) in self.seq.iter().enumerate() {
            if k > 0 {
                f.write_str(" ")?;
            }
            match (graph_like, c) {
                (true, 0) => write!(f, "{}", i + 1)?,
                (true, _) => write!(f, "{}'", i + 1)?,
                (false, _) => write!(f, "{}:{}", c + 1, i + 1)?,
            }
        }
        Ok(())
    }
}
