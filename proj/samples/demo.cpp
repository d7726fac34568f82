/*
 * Copyright 2026 The mdsarray Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

// Encodes one word of a [10,5,6] array code, corrupts two symbols and decodes.

#include <iostream>

#include "mdsarray/decoder.hpp"

int main() {
  using namespace mdsarray;
  const CodeParams code =
      build_code(5, 5, 5, PrimitivePolynomial(0b101111), standard_vandermonde(5));

  const Word info = parse_word("10110 00111 11100 01010 10001", 5);
  const Word sent = encode(code, info);
  Word received = sent;
  received[1] ^= parse_symbol("01101", 5);
  received[7] ^= parse_symbol("10000", 5);

  Trace trace;
  const DecodeOutcome out = decode_two(code, received, {RPath::vandermonde, &trace});
  std::cout << "sent      " << format_word(sent, 5) << '\n'
            << "received  " << format_word(received, 5) << '\n'
            << trace.str() << describe(out, 5) << '\n';
  const bool ok = out.decoded() && apply_corrections(received, out.corrections) == sent;
  std::cout << (ok ? "recovered" : "not recovered") << '\n';
  return ok ? 0 : 1;
}
