use std::fmt;
use std::str::FromStr;

use crate::error::CliError;

/// `start:stop:count`, both endpoints included.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Grid {
    pub start: f64,
    pub stop: f64,
    pub count: usize,
}

impl Grid {
    pub fn new(start: f64, stop: f64, count: usize) -> Result<Self, CliError> {
        if !(start.is_finite() && stop.is_finite()) {
            return Err(CliError::Usage("grid endpoints must be finite".into()));
        }
        if !(stop > start) {
            return Err(CliError::Usage(format!("grid stop {stop} must exceed start {start}")));
        }
        if count < 2 {
            return Err(CliError::Usage(format!("grid count must be at least 2 (got {count})")));
        }
        Ok(Self { start, stop, count })
    }

    pub fn points(&self) -> Vec<f64> {
        let span = self.stop - self.start;
        let last = (self.count - 1) as f64;
        (0..self.count)
            .map(|i| {
                if i + 1 == self.count {
                    self.stop
                } else {
                    self.start + span * i as f64 / last
                }
            })
            .collect()
    }
}

impl FromStr for Grid {
    type Err = CliError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let parts: Vec<&str> = s.split(':').collect();
        let [start, stop, count] = parts.as_slice() else {
            return Err(CliError::Usage(format!("grid `{s}` is not start:stop:count")));
        };
        let num = |v: &str| {
            v.trim()
                .parse::<f64>()
                .map_err(|_| CliError::Usage(format!("grid `{s}`: `{v}` is not a number")))
        };
        let count = count
            .trim()
            .parse::<usize>()
            .map_err(|_| CliError::Usage(format!("grid `{s}`: `{count}` is not a count")))?;
        Grid::new(num(start)?, num(stop)?, count)
    }
}

impl fmt::Display for Grid {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:{}:{}", self.start, self.stop, self.count)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_and_includes_endpoints() {
        let g: Grid = "0.1:5:50".parse().unwrap();
        let p = g.points();
        assert_eq!(p.len(), 50);
        assert_eq!(p[0], 0.1);
        assert_eq!(p[49], 5.0);
        assert!(p.windows(2).all(|w| w[1] > w[0]));
    }

    #[test]
    fn rejects_malformed() {
        for bad in ["1:2", "2:1:5", "0:1:1", "a:1:3", "0:1:-2", "0:inf:3"] {
            assert!(bad.parse::<Grid>().is_err(), "{bad}");
        }
    }
}
