/* Copyright 2026 The cocycle-forge Authors. All Rights Reserved.
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *    http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 * ========================================================================= */

#include "cocycle_forge/sl2.hpp"

#include <stdexcept>
#include <string>
#include <vector>

namespace cforge {

    Sl2Classification sl2_bracket_classify(std::string_view letters) {
        static const LieAlgebra sl2 = builtin::sl2();
        if (letters.empty()) throw std::invalid_argument("empty bracket word");
        Sl2Classification out;
        std::vector<LieElement> seq;
        for (char ch : letters) {
            switch (ch) {
                case 'X': ++out.x_count; seq.push_back(sl2.generator(0)); break;
                case 'Y': ++out.y_count; seq.push_back(sl2.generator(1)); break;
                case 'H': seq.push_back(sl2.generator(2)); break;
                default: throw std::invalid_argument(std::string("not an sl2 basis letter: ") + ch);
            }
        }
        out.value = iterated_bracket(sl2, seq);
        if (out.value.is_zero()) return out;

        const int diff = out.x_count - out.y_count;
        int expected = -1;
        if (diff == 0) { out.shape = Sl2Shape::H; expected = 2; }
        else if (diff == 1) { out.shape = Sl2Shape::X; expected = 0; }
        else if (diff == -1) { out.shape = Sl2Shape::Y; expected = 1; }

        if (expected < 0 || out.value.size() != 1 || out.value.begin()->first != expected) {
            out.obeys_lemma = false;
            return out;
        }
        out.lambda = out.value.begin()->second;
        return out;
    }

}  // namespace cforge
