#pragma once

#include <string_view>

namespace apnle {

/// Copy of data/reference_classes.json (a test keeps the two in sync).
/// Tuples are listed as (B, A) block lists; "In" is an identity block.
/// verdict: dim | quad | search | yes | open.
inline constexpr std::string_view kReferenceClassesJson = R"json({
 "schema": 1,
 "dimensions": [
  {
   "n": 6,
   "classes": [
    {
     "id": 1,
     "B": [
      "X^6+X^5+X^4+X^3+X+1"
     ],
     "A": [
      "X^6+X^3+X^2+1"
     ],
     "verdict": "search"
    },
    {
     "id": 2,
     "B": [
      "X^6+X^5+X^4+X^3+X+1"
     ],
     "A": [
      "X^6+X^5+X^3+X^2+X+1"
     ],
     "verdict": "search"
    },
    {
     "id": 3,
     "B": [
      "X^6+X^5+X^4+X^3+X+1"
     ],
     "A": [
      "X^6+X^5+X^4+1"
     ],
     "verdict": "search"
    },
    {
     "id": 4,
     "B": [
      "X^6+X^5+X^4+X^3+X+1"
     ],
     "A": [
      "X^6+X^5+X^4+X^3+X+1"
     ],
     "verdict": "quad"
    },
    {
     "id": 5,
     "B": [
      "X^6+X^5+X^4+X^3+X^2+X+1"
     ],
     "A": [
      "X^6+X^5+X^4+X^3+X^2+X+1"
     ],
     "verdict": "yes",
     "solutions": [
      "dillon"
     ]
    },
    {
     "id": 6,
     "B": [
      "I1",
      "X^5+1"
     ],
     "A": [
      "I1",
      "X^5+1"
     ],
     "verdict": "dim"
    },
    {
     "id": 7,
     "B": [
      "I2",
      "X^4+X^3+X^2+1"
     ],
     "A": [
      "I2",
      "X^4+X^2+X+1"
     ],
     "verdict": "search"
    },
    {
     "id": 8,
     "B": [
      "I2",
      "X^4+X^3+X^2+1"
     ],
     "A": [
      "I2",
      "X^4+X^3+X^2+1"
     ],
     "verdict": "quad"
    },
    {
     "id": 9,
     "B": [
      "X^3+1",
      "X^3+1"
     ],
     "A": [
      "X^3+1",
      "X^3+1"
     ],
     "verdict": "dim"
    },
    {
     "id": 10,
     "B": [
      "X^3+X^2+1",
      "X^3+X^2+1"
     ],
     "A": [
      "X^6+X^5+X^4+X^3+X^2+X+1"
     ],
     "verdict": "search"
    },
    {
     "id": 11,
     "B": [
      "X^3+X^2+1",
      "X^3+X^2+1"
     ],
     "A": [
      "X^3+X+1",
      "X^3+X+1"
     ],
     "verdict": "search"
    },
    {
     "id": 12,
     "B": [
      "X^3+X^2+1",
      "X^3+X^2+1"
     ],
     "A": [
      "X^3+X^2+1",
      "X^3+X^2+1"
     ],
     "verdict": "quad"
    },
    {
     "id": 13,
     "B": [
      "I3",
      "X^3+1"
     ],
     "A": [
      "I3",
      "X^3+1"
     ],
     "verdict": "dim"
    },
    {
     "id": 14,
     "B": [
      "X^2+1",
      "X^2+1",
      "X^2+1"
     ],
     "A": [
      "X^2+1",
      "X^2+1",
      "X^2+1"
     ],
     "verdict": "search"
    },
    {
     "id": 15,
     "B": [
      "X^2+X+1",
      "X^2+X+1",
      "X^2+X+1"
     ],
     "A": [
      "X^2+X+1",
      "X^2+X+1",
      "X^2+X+1"
     ],
     "verdict": "search"
    },
    {
     "id": 16,
     "B": [
      "I2",
      "X^2+1",
      "X^2+1"
     ],
     "A": [
      "I2",
      "X^2+1",
      "X^2+1"
     ],
     "verdict": "dim"
    },
    {
     "id": 17,
     "B": [
      "I4",
      "X^2+1"
     ],
     "A": [
      "I4",
      "X^2+1"
     ],
     "verdict": "dim"
    }
   ]
  },
  {
   "n": 7,
   "classes": [
    {
     "id": 1,
     "B": [
      "X^7+1"
     ],
     "A": [
      "X^7+1"
     ],
     "verdict": "yes",
     "solutions": [
      "x^5",
      "x^9",
      "x^63",
      "x^78",
      "x^85",
      "x^88"
     ]
    },
    {
     "id": 2,
     "B": [
      "X^7+X^6+X^5+X^4+X^3+X^2+1"
     ],
     "A": [
      "X^7+X^3+1"
     ],
     "verdict": "quad"
    },
    {
     "id": 3,
     "B": [
      "X^7+X^6+X^5+X^4+X^3+X^2+1"
     ],
     "A": [
      "X^7+X^5+X^3+X+1"
     ],
     "verdict": "quad"
    },
    {
     "id": 4,
     "B": [
      "X^7+X^6+X^5+X^4+X^3+X^2+1"
     ],
     "A": [
      "X^7+X^5+X^4+X^3+X^2+X+1"
     ],
     "verdict": "yes",
     "solutions": [
      "x^63"
     ]
    },
    {
     "id": 5,
     "B": [
      "X^7+X^6+X^5+X^4+X^3+X^2+1"
     ],
     "A": [
      "X^7+X^6+1"
     ],
     "verdict": "yes",
     "solutions": [
      "x^9"
     ]
    },
    {
     "id": 6,
     "B": [
      "X^7+X^6+X^5+X^4+X^3+X^2+1"
     ],
     "A": [
      "X^7+X^6+X^4+X+1"
     ],
     "verdict": "quad"
    },
    {
     "id": 7,
     "B": [
      "X^7+X^6+X^5+X^4+X^3+X^2+1"
     ],
     "A": [
      "X^7+X^6+X^5+X^2+1"
     ],
     "verdict": "yes",
     "solutions": [
      "x^5"
     ]
    },
    {
     "id": 8,
     "B": [
      "X^7+X^6+X^5+X^4+X^3+X^2+1"
     ],
     "A": [
      "X^7+X^6+X^5+X^3+X^2+X+1"
     ],
     "verdict": "yes",
     "solutions": [
      "x^78"
     ]
    },
    {
     "id": 9,
     "B": [
      "X^7+X^6+X^5+X^4+X^3+X^2+1"
     ],
     "A": [
      "X^7+X^6+X^5+X^4+1"
     ],
     "verdict": "yes",
     "solutions": [
      "x^85"
     ]
    },
    {
     "id": 10,
     "B": [
      "X^7+X^6+X^5+X^4+X^3+X^2+1"
     ],
     "A": [
      "X^7+X^6+X^5+X^4+X^2+X+1"
     ],
     "verdict": "yes",
     "solutions": [
      "x^88"
     ]
    },
    {
     "id": 11,
     "B": [
      "X^7+X^6+X^5+X^4+X^3+X^2+1"
     ],
     "A": [
      "X^7+X^6+X^5+X^4+X^3+X^2+1"
     ],
     "verdict": "quad"
    },
    {
     "id": 12,
     "B": [
      "I1",
      "X^6+X^5+X^4+X^3+X+1"
     ],
     "A": [
      "I1",
      "X^6+X^3+X^2+1"
     ],
     "verdict": "dim"
    },
    {
     "id": 13,
     "B": [
      "I1",
      "X^6+X^5+X^4+X^3+X+1"
     ],
     "A": [
      "I1",
      "X^6+X^5+X^3+X^2+X+1"
     ],
     "verdict": "dim"
    },
    {
     "id": 14,
     "B": [
      "I1",
      "X^6+X^5+X^4+X^3+X+1"
     ],
     "A": [
      "I1",
      "X^6+X^5+X^4+1"
     ],
     "verdict": "dim"
    },
    {
     "id": 15,
     "B": [
      "I1",
      "X^6+X^5+X^4+X^3+X+1"
     ],
     "A": [
      "I1",
      "X^6+X^5+X^4+X^3+X+1"
     ],
     "verdict": "dim"
    },
    {
     "id": 16,
     "B": [
      "I2",
      "X^5+1"
     ],
     "A": [
      "I2",
      "X^5+1"
     ],
     "verdict": "open"
    },
    {
     "id": 17,
     "B": [
      "X^3+X+1",
      "X^4+X^3+X^2+1"
     ],
     "A": [
      "X^7+1"
     ],
     "verdict": "search"
    },
    {
     "id": 18,
     "B": [
      "X^3+X+1",
      "X^4+X^3+X^2+1"
     ],
     "A": [
      "X^3+X^2+1",
      "X^4+X^2+X+1"
     ],
     "verdict": "search"
    },
    {
     "id": 19,
     "B": [
      "X^3+X+1",
      "X^4+X^3+X^2+1"
     ],
     "A": [
      "X^3+X+1",
      "X^4+X^3+X^2+1"
     ],
     "verdict": "quad"
    },
    {
     "id": 20,
     "B": [
      "I3",
      "X^4+X^3+X^2+1"
     ],
     "A": [
      "I3",
      "X^4+X^2+X+1"
     ],
     "verdict": "dim"
    },
    {
     "id": 21,
     "B": [
      "I3",
      "X^4+X^3+X^2+1"
     ],
     "A": [
      "I3",
      "X^4+X^3+X^2+1"
     ],
     "verdict": "dim"
    },
    {
     "id": 22,
     "B": [
      "I1",
      "X^3+1",
      "X^3+1"
     ],
     "A": [
      "I1",
      "X^3+1",
      "X^3+1"
     ],
     "verdict": "open"
    },
    {
     "id": 23,
     "B": [
      "X^2+X+1",
      "X^2+X+1",
      "X^3+1"
     ],
     "A": [
      "X^2+X+1",
      "X^2+X+1",
      "X^3+1"
     ],
     "verdict": "open"
    },
    {
     "id": 24,
     "B": [
      "I4",
      "X^3+1"
     ],
     "A": [
      "I4",
      "X^3+1"
     ],
     "verdict": "search"
    },
    {
     "id": 25,
     "B": [
      "I1",
      "X^2+1",
      "X^2+1",
      "X^2+1"
     ],
     "A": [
      "I1",
      "X^2+1",
      "X^2+1",
      "X^2+1"
     ],
     "verdict": "dim"
    },
    {
     "id": 26,
     "B": [
      "I3",
      "X^2+1",
      "X^2+1"
     ],
     "A": [
      "I3",
      "X^2+1",
      "X^2+1"
     ],
     "verdict": "search"
    },
    {
     "id": 27,
     "B": [
      "I5",
      "X^2+1"
     ],
     "A": [
      "I5",
      "X^2+1"
     ],
     "verdict": "dim"
    }
   ]
  },
  {
   "n": 8,
   "classes": [
    {
     "id": 1,
     "B": [
      "X^8+X^7+X^6+X^4+X^2+X+1"
     ],
     "A": [
      "X^8+X^5+X^4+X^3+1"
     ],
     "verdict": "search"
    },
    {
     "id": 2,
     "B": [
      "X^8+X^7+X^6+X^4+X^2+X+1"
     ],
     "A": [
      "X^8+X^7+X^6+X^4+X^2+X+1"
     ],
     "verdict": "search"
    },
    {
     "id": 3,
     "B": [
      "X^8+X^7+X^6+X^5+X^4+X^3+X^2+1"
     ],
     "A": [
      "X^8+X^6+X^4+X^3+X^2+1"
     ],
     "verdict": "quad"
    },
    {
     "id": 4,
     "B": [
      "X^8+X^7+X^6+X^5+X^4+X^3+X^2+1"
     ],
     "A": [
      "X^8+X^6+X^5+X^4+X^2+1"
     ],
     "verdict": "search"
    },
    {
     "id": 5,
     "B": [
      "X^8+X^7+X^6+X^5+X^4+X^3+X^2+1"
     ],
     "A": [
      "X^8+X^6+X^5+X^4+X^3+X^2+X+1"
     ],
     "verdict": "search"
    },
    {
     "id": 6,
     "B": [
      "X^8+X^7+X^6+X^5+X^4+X^3+X^2+1"
     ],
     "A": [
      "X^8+X^7+X^4+X^3+X+1"
     ],
     "verdict": "search"
    },
    {
     "id": 7,
     "B": [
      "X^8+X^7+X^6+X^5+X^4+X^3+X^2+1"
     ],
     "A": [
      "X^8+X^7+X^5+X^2+X+1"
     ],
     "verdict": "quad"
    },
    {
     "id": 8,
     "B": [
      "X^8+X^7+X^6+X^5+X^4+X^3+X^2+1"
     ],
     "A": [
      "X^8+X^7+X^5+X^4+X+1"
     ],
     "verdict": "search"
    },
    {
     "id": 9,
     "B": [
      "X^8+X^7+X^6+X^5+X^4+X^3+X^2+1"
     ],
     "A": [
      "X^8+X^7+X^6+1"
     ],
     "verdict": "search"
    },
    {
     "id": 10,
     "B": [
      "X^8+X^7+X^6+X^5+X^4+X^3+X^2+1"
     ],
     "A": [
      "X^8+X^7+X^6+X^3+X+1"
     ],
     "verdict": "search"
    },
    {
     "id": 11,
     "B": [
      "X^8+X^7+X^6+X^5+X^4+X^3+X^2+1"
     ],
     "A": [
      "X^8+X^7+X^6+X^5+X^3+1"
     ],
     "verdict": "quad"
    },
    {
     "id": 12,
     "B": [
      "X^8+X^7+X^6+X^5+X^4+X^3+X^2+1"
     ],
     "A": [
      "X^8+X^7+X^6+X^5+X^4+X^3+X^2+1"
     ],
     "verdict": "quad"
    },
    {
     "id": 13,
     "B": [
      "I1",
      "X^7+1"
     ],
     "A": [
      "I1",
      "X^7+1"
     ],
     "verdict": "dim"
    },
    {
     "id": 14,
     "B": [
      "I2",
      "X^6+X^5+X^4+X^3+X+1"
     ],
     "A": [
      "I2",
      "X^6+X^3+X^2+1"
     ],
     "verdict": "search"
    },
    {
     "id": 15,
     "B": [
      "I2",
      "X^6+X^5+X^4+X^3+X+1"
     ],
     "A": [
      "I2",
      "X^6+X^5+X^3+X^2+X+1"
     ],
     "verdict": "search"
    },
    {
     "id": 16,
     "B": [
      "I2",
      "X^6+X^5+X^4+X^3+X+1"
     ],
     "A": [
      "I2",
      "X^6+X^5+X^4+1"
     ],
     "verdict": "search"
    },
    {
     "id": 17,
     "B": [
      "I2",
      "X^6+X^5+X^4+X^3+X+1"
     ],
     "A": [
      "I2",
      "X^6+X^5+X^4+X^3+X+1"
     ],
     "verdict": "quad"
    },
    {
     "id": 18,
     "B": [
      "I3",
      "X^5+1"
     ],
     "A": [
      "I3",
      "X^5+1"
     ],
     "verdict": "dim"
    },
    {
     "id": 19,
     "B": [
      "X^4+X^3+X^2+1",
      "X^4+X^3+X^2+1"
     ],
     "A": [
      "I1",
      "X^7+1"
     ],
     "verdict": "dim"
    },
    {
     "id": 20,
     "B": [
      "X^4+X^3+X^2+1",
      "X^4+X^3+X^2+1"
     ],
     "A": [
      "X^4+X^2+X+1",
      "X^4+X^2+X+1"
     ],
     "verdict": "dim"
    },
    {
     "id": 21,
     "B": [
      "X^4+X^3+X^2+1",
      "X^4+X^3+X^2+1"
     ],
     "A": [
      "X^4+X^3+X^2+1",
      "X^4+X^3+X^2+1"
     ],
     "verdict": "dim"
    },
    {
     "id": 22,
     "B": [
      "X^4+X^3+X^2+X+1",
      "X^4+X^3+X^2+X+1"
     ],
     "A": [
      "X^4+X^3+X^2+X+1",
      "X^4+X^3+X^2+X+1"
     ],
     "verdict": "open"
    },
    {
     "id": 23,
     "B": [
      "I4",
      "X^4+X^3+X^2+1"
     ],
     "A": [
      "I4",
      "X^4+X^2+X+1"
     ],
     "verdict": "search"
    },
    {
     "id": 24,
     "B": [
      "I4",
      "X^4+X^3+X^2+1"
     ],
     "A": [
      "I4",
      "X^4+X^3+X^2+1"
     ],
     "verdict": "quad"
    },
    {
     "id": 25,
     "B": [
      "X^2+X+1",
      "X^3+1",
      "X^3+1"
     ],
     "A": [
      "X^2+X+1",
      "X^3+1",
      "X^3+1"
     ],
     "verdict": "dim"
    },
    {
     "id": 26,
     "B": [
      "I2",
      "X^3+1",
      "X^3+1"
     ],
     "A": [
      "I2",
      "X^3+1",
      "X^3+1"
     ],
     "verdict": "dim"
    },
    {
     "id": 27,
     "B": [
      "I5",
      "X^3+1"
     ],
     "A": [
      "I5",
      "X^3+1"
     ],
     "verdict": "search"
    },
    {
     "id": 28,
     "B": [
      "X^2+1",
      "X^2+1",
      "X^2+1",
      "X^2+1"
     ],
     "A": [
      "X^2+1",
      "X^2+1",
      "X^2+1",
      "X^2+1"
     ],
     "verdict": "dim"
    },
    {
     "id": 29,
     "B": [
      "X^2+X+1",
      "X^2+X+1",
      "X^2+X+1",
      "X^2+X+1"
     ],
     "A": [
      "X^2+X+1",
      "X^2+X+1",
      "X^2+X+1",
      "X^2+X+1"
     ],
     "verdict": "search"
    },
    {
     "id": 30,
     "B": [
      "I2",
      "X^2+1",
      "X^2+1",
      "X^2+1"
     ],
     "A": [
      "I2",
      "X^2+1",
      "X^2+1",
      "X^2+1"
     ],
     "verdict": "open"
    },
    {
     "id": 31,
     "B": [
      "I4",
      "X^2+1",
      "X^2+1"
     ],
     "A": [
      "I4",
      "X^2+1",
      "X^2+1"
     ],
     "verdict": "search"
    },
    {
     "id": 32,
     "B": [
      "I6",
      "X^2+1"
     ],
     "A": [
      "I6",
      "X^2+1"
     ],
     "verdict": "dim"
    }
   ]
  }
 ]
}
)json";

}  // namespace apnle
