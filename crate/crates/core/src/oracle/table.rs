use crate::error::TableError;
use crate::logic::table::{FiniteGroupTable, GenRef, TableDocument};
use crate::oracle::{CanonicalKey, GroupOracle};
use crate::word::{is_valid_name, Alphabet, Sign, Word};

/// A finite group given by its multiplication table, marked by the
/// document's `gens` list (all non-identity elements when absent).
#[derive(Debug)]
pub struct TableOracle {
    table: FiniteGroupTable,
    gens: Vec<usize>,
    alphabet: Alphabet,
    descriptor: String,
}

impl TableOracle {
    pub fn new(table: FiniteGroupTable, gens: Vec<usize>, descriptor: String) -> TableOracle {
        let names: Vec<&str> = gens.iter().map(|&g| table.name(g)).collect();
        let alphabet =
            Alphabet::new(&names).ok().filter(|_| names.iter().all(|n| is_valid_name(n))).unwrap_or_else(|| Alphabet::standard(gens.len()));
        TableOracle { table, gens, alphabet, descriptor }
    }

    pub fn from_json(text: &str, descriptor: String) -> Result<TableOracle, TableError> {
        let doc: TableDocument = serde_json::from_str(text).map_err(|e| TableError::Malformed(e.to_string()))?;
        let table = FiniteGroupTable::from_document(&doc)?;
        let gens: Vec<usize> = match &doc.gens {
            None if table.order() == 1 => vec![0],
            None => (1..table.order()).collect(),
            Some(list) => list
                .iter()
                .map(|g| match g {
                    GenRef::Index(i) if *i < table.order() => Ok(*i),
                    GenRef::Index(i) => Err(TableError::Malformed(format!("generator index {i} out of range"))),
                    GenRef::Name(n) => table.position(n).ok_or_else(|| TableError::Malformed(format!("unknown generator element `{n}`"))),
                })
                .collect::<Result<_, _>>()?,
        };
        if gens.is_empty() {
            return Err(TableError::Malformed("no generators".into()));
        }
        Ok(TableOracle::new(table, gens, descriptor))
    }

    pub fn table(&self) -> &FiniteGroupTable {
        &self.table
    }

    pub fn element(&self, w: &Word) -> usize {
        w.letters().iter().fold(0, |x, l| {
            let g = self.gens[l.gen];
            let g = if l.sign == Sign::Pos { g } else { self.table.inv(g) };
            self.table.mul(x, g)
        })
    }
}

impl GroupOracle for TableOracle {
    fn alphabet(&self) -> &Alphabet {
        &self.alphabet
    }

    fn descriptor(&self) -> &str {
        &self.descriptor
    }

    fn normal_form(&self, w: &Word) -> CanonicalKey {
        CanonicalKey::Element(self.element(w))
    }
}
