use std::fmt;
use std::str::FromStr;

use crate::error::Error;

/// The four compiled-in coefficient domains.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum DomainId {
    /// The integers.
    Z,
    /// Gaussian integers `a + b i`.
    Zi,
    /// Univariate polynomials with rational coefficients.
    Qx,
    /// The quadratic order `a + b s` with `s² = -5`.
    ZSqrtM5,
}

impl DomainId {
    pub const ALL: [DomainId; 4] = [DomainId::Z, DomainId::Zi, DomainId::Qx, DomainId::ZSqrtM5];

    pub fn as_str(self) -> &'static str {
        match self {
            DomainId::Z => "z",
            DomainId::Zi => "zi",
            DomainId::Qx => "qx",
            DomainId::ZSqrtM5 => "zsqrtm5",
        }
    }

    pub fn descriptor(self) -> DomainDescriptor {
        let full = |id| DomainDescriptor {
            id,
            is_gcd: true,
            is_accp: true,
            is_ufd: true,
            is_pre_schreier: true,
        };
        match self {
            DomainId::Z | DomainId::Zi | DomainId::Qx => full(self),
            DomainId::ZSqrtM5 => DomainDescriptor {
                id: self,
                is_gcd: false,
                is_accp: true,
                is_ufd: false,
                is_pre_schreier: false,
            },
        }
    }

    /// Fails with a capability error unless the domain has `cap`.
    pub fn require(self, cap: Capability) -> Result<(), Error> {
        if self.descriptor().has(cap) {
            Ok(())
        } else {
            Err(Error::Capability { required: cap, domain: self })
        }
    }
}

impl fmt::Display for DomainId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.pad(self.as_str())
    }
}

impl FromStr for DomainId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        match s.trim() {
            "z" => Ok(DomainId::Z),
            "zi" => Ok(DomainId::Zi),
            "qx" => Ok(DomainId::Qx),
            "zsqrtm5" => Ok(DomainId::ZSqrtM5),
            other => Err(Error::usage(format!(
                "unknown domain `{other}` (expected z, zi, qx or zsqrtm5)"
            ))),
        }
    }
}

/// Structural properties of a domain that gate which operations are legal.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct DomainDescriptor {
    pub id: DomainId,
    pub is_gcd: bool,
    pub is_accp: bool,
    pub is_ufd: bool,
    pub is_pre_schreier: bool,
}

impl DomainDescriptor {
    pub fn has(&self, cap: Capability) -> bool {
        match cap {
            Capability::Gcd => self.is_gcd,
            Capability::Accp => self.is_accp,
            Capability::Ufd => self.is_ufd,
            Capability::PreSchreier => self.is_pre_schreier,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Capability {
    Gcd,
    Accp,
    Ufd,
    PreSchreier,
}

impl Capability {
    pub fn flag_name(self) -> &'static str {
        match self {
            Capability::Gcd => "is_gcd",
            Capability::Accp => "is_accp",
            Capability::Ufd => "is_ufd",
            Capability::PreSchreier => "is_pre_schreier",
        }
    }
}

impl fmt::Display for Capability {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Capability::Gcd => "gcd",
            Capability::Accp => "accp",
            Capability::Ufd => "ufd",
            Capability::PreSchreier => "pre-schreier",
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn descriptor_table_is_consistent() {
        for id in DomainId::ALL {
            let d = id.descriptor();
            if d.is_ufd {
                assert!(d.is_gcd && d.is_accp);
            }
            if d.is_gcd {
                assert!(d.is_pre_schreier);
            }
            assert_eq!(id.as_str().parse::<DomainId>().unwrap(), id);
        }
        let m5 = DomainId::ZSqrtM5.descriptor();
        assert!(m5.is_accp && !m5.is_gcd && !m5.is_ufd && !m5.is_pre_schreier);
    }

    #[test]
    fn capability_message_names_flag() {
        let err = DomainId::ZSqrtM5.require(Capability::Gcd).unwrap_err();
        assert_eq!(err.to_string(), "gcd required, domain zsqrtm5 lacks is_gcd");
    }
}
