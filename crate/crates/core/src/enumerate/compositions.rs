//! Compositions of an integer into a fixed number of parts, in
//! lexicographic order.

/// Iterator over all compositions of `total` into `parts` parts. With
/// `positive` every part is at least 1, otherwise parts may be 0.
#[derive(Debug, Clone)]
pub struct Compositions {
    current: Option<Vec<usize>>,
    min: usize,
}

impl Compositions {
    pub fn new(total: usize, parts: usize, positive: bool) -> Self {
        let min = usize::from(positive);
        let current = if parts == 0 {
            (total == 0).then(Vec::new)
        } else if total < min * parts {
            None
        } else {
            let mut first = vec![min; parts];
            first[parts - 1] = total - min * (parts - 1);
            Some(first)
        };
        Compositions { current, min }
    }
}

impl Iterator for Compositions {
    type Item = Vec<usize>;

    fn next(&mut self) -> Option<Vec<usize>> {
        let out = self.current.take()?;
        let m = out.len();
        let mut next = out.clone();
        let mut tail: usize = 0;
        // rightmost position that can grow by taking one unit from the tail
        for i in (0..m.saturating_sub(1)).rev() {
            tail += next[i + 1];
            let slots = m - 1 - i;
            if tail > self.min * slots {
                next[i] += 1;
                let rest = tail - 1;
                for v in next.iter_mut().skip(i + 1) {
                    *v = self.min;
                }
                next[m - 1] = rest - self.min * (slots - 1);
                self.current = Some(next);
                break;
            }
        }
        Some(out)
    }
}

/// `compositions(total, parts, positive)`.
pub fn compositions(total: usize, parts: usize, positive: bool) -> Compositions {
    Compositions::new(total, parts, positive)
}
