#pragma once

namespace circdet::reference {

// Contents of data/tables.txt: lines "alphabet,n,value,ratio,decimal"
// followed by a "# checksum <fnv1a64-hex>" guard line.
extern const char* const kEmbeddedTables;

}  // namespace circdet::reference
