// Copyright 2026 The framekit authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <catch2/catch_amalgamated.hpp>

#include "framekit/pauli.hpp"

using framekit::PauliOperator;

TEST_CASE("pauli labels round trip") {
    for (const char* label : {"+X", "-Y", "+iZ", "-iX", "+IXYZ", "-ZZZZZ", "+iYIY"}) {
        PauliOperator p = PauliOperator::from_label(label);
        REQUIRE(p.to_string() == label);
    }
    // Unsigned labels print with an explicit plus.
    REQUIRE(PauliOperator::from_label("XYZ").to_string() == "+XYZ");
    REQUIRE(PauliOperator::from_label("I").to_string() == "+I");
}

TEST_CASE("pauli label letter order matches qubit order") {
    PauliOperator p = PauliOperator::from_label("XIZ");
    REQUIRE(p.axis_at(0) == 'X');
    REQUIRE(p.axis_at(1) == 'I');
    REQUIRE(p.axis_at(2) == 'Z');
    REQUIRE(p.x_bits() == 0b001ull);
    REQUIRE(p.z_bits() == 0b100ull);
}

TEST_CASE("pauli y stores the phase that makes it hermitian") {
    PauliOperator y = PauliOperator::from_label("Y");
    REQUIRE(y.x_bits() == 1);
    REQUIRE(y.z_bits() == 1);
    REQUIRE(y.phase_exponent() == 1);
    REQUIRE(y.is_hermitian());
    REQUIRE(y.sign() == +1);
}

TEST_CASE("single qubit products carry the right phases") {
    PauliOperator x = PauliOperator::from_label("X");
    PauliOperator y = PauliOperator::from_label("Y");
    PauliOperator z = PauliOperator::from_label("Z");

    REQUIRE((x * y).to_string() == "+iZ");
    REQUIRE((y * x).to_string() == "-iZ");
    REQUIRE((y * z).to_string() == "+iX");
    REQUIRE((z * y).to_string() == "-iX");
    REQUIRE((z * x).to_string() == "+iY");
    REQUIRE((x * z).to_string() == "-iY");
    REQUIRE((x * x).is_identity());
    REQUIRE((y * y).is_identity());
    REQUIRE((z * z).is_identity());
}

TEST_CASE("multi qubit products multiply per qubit") {
    PauliOperator a = PauliOperator::from_label("XYI");
    PauliOperator b = PauliOperator::from_label("YXZ");
    // XY=iZ and YX=-iZ cancel, leaving ZZZ with no net phase.
    REQUIRE((a * b).to_string() == "+ZZZ");
}

TEST_CASE("adjoint inverts the phase and fixes hermitian elements") {
    PauliOperator p = PauliOperator::from_label("+iX");
    REQUIRE(p.adjoint().to_string() == "-iX");
    REQUIRE((p * p.adjoint()).is_identity());
    PauliOperator y = PauliOperator::from_label("YY");
    REQUIRE(y.adjoint() == y);
    PauliOperator m = PauliOperator::from_label("-XZ");
    REQUIRE(m.adjoint() == m);
}

TEST_CASE("hermiticity tracks the phase exponent") {
    REQUIRE(PauliOperator::from_label("XX").is_hermitian());
    REQUIRE(PauliOperator::from_label("-XX").is_hermitian());
    REQUIRE_FALSE(PauliOperator::from_label("+iXX").is_hermitian());
    REQUIRE(PauliOperator::from_label("Y").is_hermitian());
    REQUIRE(PauliOperator::from_label("YY").is_hermitian());
    REQUIRE(PauliOperator::from_label("-YY").sign() == -1);
    REQUIRE_THROWS_AS(PauliOperator::from_label("iX").sign(), std::logic_error);
}

TEST_CASE("commutation is decided by the symplectic overlap") {
    auto p = [](const char* s) { return PauliOperator::from_label(s); };
    REQUIRE_FALSE(p("X").commutes_with(p("Z")));
    REQUIRE(p("XX").commutes_with(p("ZZ")));
    REQUIRE(p("XZZXI").commutes_with(p("IXZZX")));
    REQUIRE(p("XZZXI").commutes_with(p("XXXXX")));
    REQUIRE_FALSE(p("ZIIII").commutes_with(p("XXXXX")));
    REQUIRE(p("IZIII").commutes_with(p("ZZZZZ")));
}

TEST_CASE("squares follow from the y count") {
    // (i^1 XZ)^2 = I for Y; products of distinct letters square to identity
    // with the phases cancelling.
    for (const char* label : {"X", "Y", "Z", "XY", "YZ", "XYZ", "YYYY"}) {
        PauliOperator p = PauliOperator::from_label(label);
        REQUIRE((p * p).is_identity());
    }
}

TEST_CASE("restrict keeps one qubit and the whole phase") {
    PauliOperator p = PauliOperator::from_label("-XIZ");
    PauliOperator q0 = p.restrict_to(0);
    REQUIRE(q0.num_qubits() == 1);
    REQUIRE(q0.to_string() == "-X");
    REQUIRE(p.restrict_to(1).to_string() == "-I");
    REQUIRE(p.restrict_to(2).to_string() == "-Z");

    // The phase exponent travels whole: restricting -XIY away from its Y
    // keeps the i that the Y letter contributed.
    PauliOperator m = PauliOperator::from_label("-XIY");
    REQUIRE(m.phase_exponent() == 3);
    REQUIRE(m.restrict_to(0).to_string() == "-iX");
    REQUIRE(m.restrict_to(2).to_string() == "-Y");
}

TEST_CASE("weight counts non identity qubits") {
    REQUIRE(PauliOperator::from_label("IXIYZ").weight() == 3);
    REQUIRE(PauliOperator::identity(7).weight() == 0);
}

TEST_CASE("constructors validate their inputs") {
    REQUIRE_THROWS_AS(PauliOperator(0, 0, 0, 0), std::invalid_argument);
    REQUIRE_THROWS_AS(PauliOperator(65, 0, 0, 0), std::invalid_argument);
    REQUIRE_THROWS_AS(PauliOperator(2, 0b100, 0, 0), std::invalid_argument);
    REQUIRE_THROWS_AS(PauliOperator::from_label(""), std::invalid_argument);
    REQUIRE_THROWS_AS(PauliOperator::from_label("+i"), std::invalid_argument);
    REQUIRE_THROWS_AS(PauliOperator::from_label("XQ"), std::invalid_argument);
    REQUIRE_NOTHROW(PauliOperator(64, ~0ull, ~0ull, 0));
}

TEST_CASE("mixed size products are rejected") {
    PauliOperator a = PauliOperator::identity(2);
    PauliOperator b = PauliOperator::identity(3);
    REQUIRE_THROWS_AS(a * b, std::invalid_argument);
}
