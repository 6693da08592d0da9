use super::Path;
use crate::{pre, Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum TurnKind {
    /// North step followed by east step.
    Ne,
    /// East step followed by north step.
    En,
}

/// Two-rowed array of turn coordinates: `p` holds abscissae, `q` ordinates,
/// both strictly increasing.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct TurnArray {
    pub p: Vec<i64>,
    pub q: Vec<i64>,
}

impl TurnArray {
    pub fn new(p: Vec<i64>, q: Vec<i64>) -> Self {
        TurnArray { p, q }
    }

    pub fn len(&self) -> usize {
        self.p.len()
    }

    pub fn is_empty(&self) -> bool {
        self.p.is_empty()
    }

    pub fn is_strict(&self) -> bool {
        self.p.len() == self.q.len() && self.p.windows(2).all(|w| w[0] < w[1]) && self.q.windows(2).all(|w| w[0] < w[1])
    }
}

fn turns(p: &Path, first: [i64; 2], second: [i64; 2]) -> Result<TurnArray> {
    check_simple(p)?;
    let pts = p.points();
    let mut out = TurnArray::default();
    for i in 0..p.steps.len().saturating_sub(1) {
        if p.steps[i] == first && p.steps[i + 1] == second {
            out.p.push(pts[i + 1][0]);
            out.q.push(pts[i + 1][1]);
        }
    }
    Ok(out)
}

fn check_simple(p: &Path) -> Result<()> {
    if p.start.len() != 2 || p.steps.iter().any(|s| s.as_slice() != [1, 0] && s.as_slice() != [0, 1]) {
        return Err(Error::Precondition("turns are defined for planar simple paths".into()));
    }
    Ok(())
}

pub fn ne_turns(p: &Path) -> Result<TurnArray> {
    turns(p, [0, 1], [1, 0])
}

pub fn en_turns(p: &Path) -> Result<TurnArray> {
    turns(p, [1, 0], [0, 1])
}

/// Rebuild the path from `(a,b)` to `(c,d)` with the given turns.
pub fn turns_to_path(kind: TurnKind, a: i64, b: i64, c: i64, d: i64, t: &TurnArray) -> Result<Path> {
    pre(t.is_strict(), || "turn rows must be strictly increasing and of equal length".into())?;
    let l = t.len();
    let (plo, phi, qlo, qhi) = match kind {
        TurnKind::Ne => (a, c - 1, b + 1, d),
        TurnKind::En => (a + 1, c, b, d - 1),
    };
    if l > 0 {
        pre(t.p[0] >= plo && t.p[l - 1] <= phi, || format!("turn abscissae must lie in [{}, {}]", plo, phi))?;
        pre(t.q[0] >= qlo && t.q[l - 1] <= qhi, || format!("turn ordinates must lie in [{}, {}]", qlo, qhi))?;
    } else {
        pre(c >= a && d >= b, || "end point must dominate start point".into())?;
    }
    let mut steps = Vec::new();
    let mut push = |s: [i64; 2], k: i64| {
        for _ in 0..k {
            steps.push(s.to_vec());
        }
    };
    let (e, n) = ([1, 0], [0, 1]);
    let (mut px, mut qy) = (a, b);
    for i in 0..l {
        match kind {
            TurnKind::Ne => {
                push(e, t.p[i] - px);
                push(n, t.q[i] - qy);
            }
            TurnKind::En => {
                push(n, t.q[i] - qy);
                push(e, t.p[i] - px);
            }
        }
        px = t.p[i];
        qy = t.q[i];
    }
    match kind {
        TurnKind::Ne => {
            push(e, c - px);
            push(n, d - qy);
        }
        TurnKind::En => {
            push(n, d - qy);
            push(e, c - px);
        }
    }
    Ok(Path::new(vec![a, b], steps))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn paper_path_turns() {
        let p = Path::from_word((1, -1), "NNENNEEENENN");
        assert_eq!(ne_turns(&p).unwrap(), TurnArray::new(vec![1, 2, 5], vec![1, 3, 4]));
        assert_eq!(en_turns(&p).unwrap(), TurnArray::new(vec![2, 5, 6], vec![1, 3, 4]));
    }

    #[test]
    fn straight_and_zigzag() {
        assert!(ne_turns(&Path::from_word((0, 0), "EEE")).unwrap().is_empty());
        assert_eq!(ne_turns(&Path::from_word((0, 0), "NENE")).unwrap(), TurnArray::new(vec![0, 1], vec![1, 2]));
    }

    #[test]
    fn round_trip() {
        let p = Path::from_word((1, -1), "NNENNEEENENN");
        let t = ne_turns(&p).unwrap();
        assert_eq!(turns_to_path(TurnKind::Ne, 1, -1, 6, 6, &t).unwrap(), p);
        let t = en_turns(&p).unwrap();
        assert_eq!(turns_to_path(TurnKind::En, 1, -1, 6, 6, &t).unwrap(), p);
    }

    #[test]
    fn non_simple_rejected() {
        assert!(ne_turns(&Path::new(vec![0, 0], vec![vec![1, 1]])).is_err());
    }
}
