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
 // Shape of right-nested brackets of sl2 basis letters.

#ifndef COCYCLE_FORGE_SL2_HPP
#define COCYCLE_FORGE_SL2_HPP

#include <string_view>

#include "cocycle_forge/lie_algebra.hpp"

namespace cforge {

    enum class Sl2Shape { zero, H, X, Y };

    struct Sl2Classification {
        Sl2Shape shape = Sl2Shape::zero;
        Rational lambda;  // value = lambda * (H | X | Y); 0 for the zero shape
        int x_count = 0;
        int y_count = 0;
        // A nonzero bracket is lambda*H when #X == #Y, lambda*X when #X == #Y + 1, lambda*Y when #X == #Y - 1.
        bool obeys_lemma = true;
        LieElement value;
    };

    /* letters is a word over {X, Y, H}, e.g. "XXY" for [X,[X,Y]].
     * Throws std::invalid_argument on an empty word or a foreign letter. */
    Sl2Classification sl2_bracket_classify(std::string_view letters);

}  // namespace cforge

#endif  // COCYCLE_FORGE_SL2_HPP
