#pragma once

// Generated by tools/klr_fixture_oracle.py; do not edit.

namespace skewcell {

inline const char* klr_2_2_2_json = R"json({
 "format_version": "skewcell/1",
 "comment": "quiver Hecke fixture: two strands, two components, quantum characteristic 2, charge (0,1); basis e, y2 e, psi1 e, y2^2 e at the residue sequences i = (q^0, eps q^0) and -i; the (1|1) tableau t is the one with residue sequence i; table derived by symbolic reduction from the defining relations, see tools/klr_fixture_oracle.py",
 "field": "cyclotomic:2",
 "dim": 8,
 "labels": [
  "e(i)",
  "e(-i)",
  "y2 e(i)",
  "y2 e(-i)",
  "psi1 e(i)",
  "psi1 e(-i)",
  "y2^2 e(i)",
  "y2^2 e(-i)"
 ],
 "degrees": [
  0,
  0,
  2,
  2,
  2,
  2,
  4,
  4
 ],
 "star": [
  0,
  1,
  2,
  3,
  5,
  4,
  6,
  7
 ],
 "unit": [
  "1",
  "1",
  "0",
  "0",
  "0",
  "0",
  "0",
  "0"
 ],
 "mult": [
  [
   0,
   0,
   [
    [
     0,
     "1"
    ]
   ]
  ],
  [
   0,
   2,
   [
    [
     2,
     "1"
    ]
   ]
  ],
  [
   0,
   5,
   [
    [
     5,
     "1"
    ]
   ]
  ],
  [
   0,
   6,
   [
    [
     6,
     "1"
    ]
   ]
  ],
  [
   1,
   1,
   [
    [
     1,
     "1"
    ]
   ]
  ],
  [
   1,
   3,
   [
    [
     3,
     "1"
    ]
   ]
  ],
  [
   1,
   4,
   [
    [
     4,
     "1"
    ]
   ]
  ],
  [
   1,
   7,
   [
    [
     7,
     "1"
    ]
   ]
  ],
  [
   2,
   0,
   [
    [
     2,
     "1"
    ]
   ]
  ],
  [
   2,
   2,
   [
    [
     6,
     "1"
    ]
   ]
  ],
  [
   3,
   1,
   [
    [
     3,
     "1"
    ]
   ]
  ],
  [
   3,
   3,
   [
    [
     7,
     "1"
    ]
   ]
  ],
  [
   4,
   0,
   [
    [
     4,
     "1"
    ]
   ]
  ],
  [
   4,
   5,
   [
    [
     7,
     "-1"
    ]
   ]
  ],
  [
   5,
   1,
   [
    [
     5,
     "1"
    ]
   ]
  ],
  [
   5,
   4,
   [
    [
     6,
     "-1"
    ]
   ]
  ],
  [
   6,
   0,
   [
    [
     6,
     "1"
    ]
   ]
  ],
  [
   7,
   1,
   [
    [
     7,
     "1"
    ]
   ]
  ]
 ],
 "datum": {
  "elements": [
   "(0|1,1)",
   "(0|2)",
   "(1|1)",
   "(1,1|0)",
   "(2|0)"
  ],
  "relations": [
   [
    1,
    0
   ],
   [
    1,
    2
   ],
   [
    1,
    3
   ],
   [
    2,
    0
   ],
   [
    2,
    3
   ],
   [
    4,
    0
   ],
   [
    4,
    2
   ],
   [
    4,
    3
   ]
  ],
  "iota": [
   0,
   1,
   2,
   3,
   4
  ],
  "tableaux": [
   {
    "degrees": [
     0
    ]
   },
   {
    "degrees": [
     2
    ]
   },
   {
    "degrees": [
     1,
     1
    ]
   },
   {
    "degrees": [
     0
    ]
   },
   {
    "degrees": [
     2
    ]
   }
  ],
  "iota_tab": [
   [
    0
   ],
   [
    0
   ],
   [
    0,
    1
   ],
   [
    0
   ],
   [
    0
   ]
  ],
  "basis": [
   [
    [
     1
    ]
   ],
   [
    [
     7
    ]
   ],
   [
    [
     2,
     5
    ],
    [
     4,
     3
    ]
   ],
   [
    [
     0
    ]
   ],
   [
    [
     6
    ]
   ]
  ]
 },
 "shift": {
  "sigmaA": [
   1,
   0,
   3,
   2,
   5,
   4,
   7,
   6
  ],
  "sigmaP": [
   3,
   4,
   2,
   0,
   1
  ],
  "sigmaT": [
   [
    0
   ],
   [
    0
   ],
   [
    1,
    0
   ],
   [
    0
   ],
   [
    0
   ]
  ]
 }
}
)json";

} // namespace skewcell
