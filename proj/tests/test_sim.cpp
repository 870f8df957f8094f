// Copyright 2026 The qstrings Authors.

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at

//     http://www.apache.org/licenses/LICENSE-2.0

// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
#include "catch_amalgamated.hpp"

#include <cmath>
#include <sstream>
#include <vector>

#include "qstrings/fingerprint.hpp"
#include "qstrings/rng.hpp"
#include "qstrings/sim/dense_state.hpp"
#include "qstrings/sim/search_register.hpp"
#include "qstrings/sim/structured_state.hpp"

using namespace qstrings;
using namespace qstrings::sim;

namespace {

constexpr double kTol = 1e-12;

RegisterLayout index_only(unsigned width) {
    RegisterLayout layout;
    layout.add("idx", width, Role::Index);
    return layout;
}

RegisterLayout index_with_flag(unsigned width) {
    RegisterLayout layout;
    layout.add("idx", width, Role::Index);
    layout.add("oracle", 1, Role::Flag);
    return layout;
}

double max_diff(std::span<const Complex> a, std::span<const Complex> b) {
    REQUIRE(a.size() == b.size());
    double d = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        d = std::max(d, std::abs(a[i] - b[i]));
    }
    return d;
}

std::vector<Complex> random_state(std::size_t n, Rng &rng) {
    std::vector<Complex> v(n);
    double norm = 0.0;
    for (auto &a : v) {
        a = {rng.uniform() - 0.5, rng.uniform() - 0.5};
        norm += std::norm(a);
    }
    for (auto &a : v) {
        a /= std::sqrt(norm);
    }
    return v;
}

RegisterSpec toy_spec(Rng &rng, std::uint64_t domain) {
    RegisterSpec spec;
    spec.index_width = ceil_log2(domain);
    spec.domain_size = domain;
    const std::uint64_t padded = std::uint64_t{1} << spec.index_width;
    DataRegisterSpec a{"a", 3, {}};
    DataRegisterSpec b{"b", 2, {}};
    for (std::uint64_t i = 0; i < padded; ++i) {
        a.table.push_back(rng.uniform_int(0, 7));
        b.table.push_back(rng.uniform_int(0, 3));
    }
    spec.data = {a, b};
    return spec;
}

} // namespace

TEST_CASE("layout bookkeeping", "[sim]") {
    RegisterLayout layout;
    layout.add("idx", 3, Role::Index).add("h", 4, Role::DataFunction, "idx");
    layout.add("flag", 1, Role::Flag);
    REQUIRE(layout.total_width() == 8);
    REQUIRE(layout.at("h").offset == 3);
    REQUIRE(layout.at("h").extract(0b1011'010) == 0b1011);
    REQUIRE(layout.at("flag").place(1) == 0b1000'0000);
    REQUIRE(layout.with_role(Role::DataFunction).size() == 1);
    REQUIRE_THROWS_AS(layout.add("idx", 1, Role::Ancilla), LayoutError);
    REQUIRE_THROWS_AS(layout.add("z", 0, Role::Ancilla), LayoutError);
    REQUIRE_THROWS_AS(layout.add("d", 2, Role::DataFunction, "nope"),
                      LayoutError);
    REQUIRE_THROWS_AS(layout.at("missing"), LayoutError);
}

TEST_CASE("gate examples", "[sim][dense]") {
    DenseState h(index_only(1));
    h.apply_gate(Gate::H, {0});
    const double r = 1.0 / std::sqrt(2.0);
    REQUIRE(std::abs(h.amplitudes()[0] - Complex(r)) < kTol);
    REQUIRE(std::abs(h.amplitudes()[1] - Complex(r)) < kTol);

    Rng rng(1);
    DenseState x(index_only(3), random_state(8, rng));
    const std::vector<Complex> before(x.amplitudes().begin(),
                                      x.amplitudes().end());
    x.apply_gate(Gate::X, {1});
    x.apply_gate(Gate::X, {1});
    REQUIRE(max_diff(x.amplitudes(), before) < kTol);

    // control on qubit 1 set, target qubit 0 clear -> both set
    DenseState c(index_only(2));
    c.apply_gate(Gate::X, {1});
    c.apply_gate(Gate::CNOT, {1, 0});
    REQUIRE(std::abs(c.amplitudes()[0b11] - Complex(1.0)) < kTol);

    DenseState z(index_only(1));
    z.apply_gate(Gate::X, {0});
    z.apply_gate(Gate::Z, {0});
    REQUIRE(std::abs(z.amplitudes()[1] + Complex(1.0)) < kTol);

    REQUIRE_THROWS_AS(c.apply_gate(Gate::H, {2}), std::out_of_range);
    REQUIRE_THROWS_AS(c.apply_gate(Gate::CNOT, {1, 1}), std::invalid_argument);
    REQUIRE_THROWS_AS(c.apply_gate(Gate::CNOT, {1}), std::invalid_argument);
}

TEST_CASE("uniform preparation", "[sim][dense]") {
    for (unsigned q : {1U, 3U}) {
        DenseState s(index_with_flag(q));
        s.prepare_uniform("idx");
        const double a = std::pow(2.0, -0.5 * q);
        for (std::uint64_t i = 0; i < (std::uint64_t{1} << q); ++i) {
            REQUIRE(std::abs(s.amplitudes()[i] - Complex(a)) < kTol);
        }
        REQUIRE(s.norm_squared() == Catch::Approx(1.0).margin(1e-12));
    }
}

TEST_CASE("phase oracle examples", "[sim][dense]") {
    DenseState s(index_with_flag(2));
    s.prepare_uniform("idx");
    const std::vector<Complex> uniform(s.amplitudes().begin(),
                                       s.amplitudes().end());
    s.phase_oracle([](std::uint64_t) { return false; });
    REQUIRE(max_diff(s.amplitudes(), uniform) < kTol);

    s.phase_oracle([](std::uint64_t) { return true; });
    for (std::size_t i = 0; i < uniform.size(); ++i) {
        REQUIRE(std::abs(s.amplitudes()[i] + uniform[i]) < kTol);
    }
    s.phase_oracle([](std::uint64_t) { return true; });

    s.phase_oracle([](std::uint64_t b) { return (b & 3U) == 2; });
    for (std::uint64_t i = 0; i < 4; ++i) {
        const Complex expect = i == 2 ? -uniform[i] : uniform[i];
        REQUIRE(std::abs(s.amplitudes()[i] - expect) < kTol);
    }
    for (std::uint64_t i = 4; i < 8; ++i) {
        REQUIRE(std::abs(s.amplitudes()[i]) < kTol);
    }
}

TEST_CASE("diffusion examples", "[sim][dense]") {
    std::vector<Complex> amps(8, Complex{});
    amps[0] = 1.0;
    DenseState s(index_with_flag(2), amps);
    s.diffusion("idx");
    const std::vector<double> expect{-0.5, 0.5, 0.5, 0.5};
    for (std::size_t i = 0; i < 4; ++i) {
        REQUIRE(std::abs(s.amplitudes()[i] - Complex(expect[i])) < kTol);
    }
    DenseState u(index_with_flag(3));
    u.prepare_uniform("idx");
    const std::vector<Complex> uniform(u.amplitudes().begin(),
                                       u.amplitudes().end());
    u.diffusion("idx");
    REQUIRE(max_diff(u.amplitudes(), uniform) < kTol);
}

TEST_CASE("reflections are involutions and preserve norm",
          "[sim][property]") {
    Rng rng(7);
    for (int trial = 0; trial < 20; ++trial) {
        const unsigned q = static_cast<unsigned>(rng.uniform_int(1, 6));
        auto amps = random_state(std::size_t{1} << (q + 1), rng);
        for (std::size_t i = std::size_t{1} << q; i < amps.size(); ++i) {
            amps[i] = 0.0;
        }
        double norm = 0.0;
        for (const auto &a : amps) {
            norm += std::norm(a);
        }
        for (auto &a : amps) {
            a /= std::sqrt(norm);
        }
        DenseState s(index_with_flag(q), amps);
        const std::uint64_t marked = rng.uniform_int(0, (1U << q) - 1);
        auto pred = [marked](std::uint64_t b) { return b == marked; };

        s.diffusion("idx");
        REQUIRE(s.norm_squared() == Catch::Approx(1.0).margin(1e-9));
        s.diffusion("idx");
        REQUIRE(max_diff(s.amplitudes(), amps) < kTol);
        s.phase_oracle(pred);
        REQUIRE(s.norm_squared() == Catch::Approx(1.0).margin(1e-9));
        s.phase_oracle(pred);
        REQUIRE(max_diff(s.amplitudes(), amps) < kTol);
        s.apply_gate(Gate::H, {0});
        REQUIRE(s.norm_squared() == Catch::Approx(1.0).margin(1e-9));

        StructuredState st(index_only(q), "idx", std::uint64_t{1} << q);
        const std::vector<Complex> initial(st.amplitudes().begin(),
                                           st.amplitudes().end());
        st.phase_oracle([marked](std::uint64_t i) { return i == marked; });
        st.diffusion();
        st.diffusion();
        st.phase_oracle([marked](std::uint64_t i) { return i == marked; });
        REQUIRE(max_diff(st.amplitudes(), initial) < kTol);
        REQUIRE(st.norm_squared() == Catch::Approx(1.0).margin(1e-9));
    }
}

TEST_CASE("measurement", "[sim]") {
    Rng rng(11);
    DenseState one(index_only(1));
    one.apply_gate(Gate::X, {0});
    for (int i = 0; i < 20; ++i) {
        REQUIRE(DenseState(one).measure(rng) == 1);
    }

    constexpr int kSamples = 10000;
    std::vector<int> counts(4, 0);
    for (int i = 0; i < kSamples; ++i) {
        DenseState s(index_with_flag(2));
        s.prepare_uniform("idx");
        ++counts[s.measure_register("idx", rng)];
    }
    for (int c : counts) {
        REQUIRE(std::abs(c / double(kSamples) - 0.25) < 0.03);
    }

    auto sequence = [](std::uint64_t seed) {
        Rng r(seed);
        std::vector<std::uint64_t> out;
        for (int i = 0; i < 50; ++i) {
            StructuredState s(index_only(3), "idx", 6);
            out.push_back(s.measure(r));
        }
        return out;
    };
    REQUIRE(sequence(5) == sequence(5));
    for (auto v : sequence(5)) {
        REQUIRE(v < 8);
    }

    DenseState col(index_with_flag(2));
    col.prepare_uniform("idx");
    col.collapse_register("idx", 2);
    REQUIRE(std::abs(col.amplitudes()[2]) == Catch::Approx(1.0));
    REQUIRE(col.norm_squared() == Catch::Approx(1.0));
}

TEST_CASE("structured state pads the domain", "[sim][structured]") {
    StructuredState s(index_only(3), "idx", 5);
    REQUIRE(s.padded_size() == 8);
    const auto probs = s.probabilities();
    for (auto p : probs) {
        REQUIRE(p == Catch::Approx(1.0 / 8));
    }
    REQUIRE_THROWS_AS(StructuredState(index_only(2), "idx", 5),
                      std::invalid_argument);
}

TEST_CASE("expand structured examples", "[sim][structured]") {
    RegisterLayout layout;
    layout.add("idx", 1, Role::Index).add("f", 1, Role::DataFunction, "idx");
    StructuredState bell(layout, "idx", 2);
    bell.bind("f", {0, 1});
    const auto dense = expand_structured(bell);
    const double r = 1.0 / std::sqrt(2.0);
    REQUIRE(std::abs(dense.amplitudes()[0b00] - Complex(r)) < kTol);
    REQUIRE(std::abs(dense.amplitudes()[0b11] - Complex(r)) < kTol);
    REQUIRE(std::abs(dense.amplitudes()[0b01]) < kTol);
    REQUIRE(std::abs(dense.amplitudes()[0b10]) < kTol);

    // four windows of a fixed text hashed mod 3
    const BitString text{1, 0, 1, 1, 0};
    const auto windows = window_hashes(text, 2, 3);
    RegisterLayout hl;
    hl.add("idx", 2, Role::Index).add("h", 2, Role::DataFunction, "idx");
    StructuredState hs(hl, "idx", 4);
    hs.bind("h", windows);
    const auto hd = expand_structured(hs);
    int nonzero = 0;
    for (std::uint64_t b = 0; b < hd.amplitudes().size(); ++b) {
        const bool on = std::abs(hd.amplitudes()[b]) > kTol;
        nonzero += on ? 1 : 0;
        if (on) {
            REQUIRE((b >> 2U) == windows[b & 3U]);
            REQUIRE(std::abs(hd.amplitudes()[b] - Complex(0.5)) < kTol);
        }
    }
    REQUIRE(nonzero == 4);
    REQUIRE(hd.norm_squared() == Catch::Approx(1.0));

    RegisterLayout wide;
    wide.add("idx", 20, Role::Index).add("d", 6, Role::DataFunction, "idx");
    StructuredState big(wide, "idx", 4);
    REQUIRE_THROWS_AS(expand_structured(big), WidthExceeded);
}

TEST_CASE("dense width cap names the width", "[sim][dense]") {
    try {
        DenseState s(index_only(25));
        FAIL("expected WidthExceeded");
    } catch (const WidthExceeded &e) {
        REQUIRE(e.width() == 25);
        REQUIRE(std::string(e.what()).find("25") != std::string::npos);
    }
}

TEST_CASE("structured and dense registers agree step by step",
          "[sim][property]") {
    Rng rng(13);
    for (std::uint64_t domain : {1U, 2U, 3U, 5U, 8U, 13U}) {
        const auto spec = toy_spec(rng, domain);
        StructuredRegister s(spec);
        DenseRegister d(spec);
        const MarkFn mark = [domain](std::uint64_t i,
                                     std::span<const std::uint64_t> row) {
            return i < domain && (row[0] + row[1]) % 3 == 0;
        };
        for (int step = 0; step < 4; ++step) {
            s.phase_oracle(mark);
            d.phase_oracle(mark);
            REQUIRE(max_diff(expand_structured(s.state()).amplitudes(),
                             d.state().amplitudes()) < 1e-9);
            s.diffusion();
            d.diffusion();
            REQUIRE(max_diff(expand_structured(s.state()).amplitudes(),
                             d.state().amplitudes()) < 1e-9);
        }
        const auto ps = s.index_probabilities();
        const auto pd = d.index_probabilities();
        for (std::size_t i = 0; i < ps.size(); ++i) {
            REQUIRE(ps[i] == Catch::Approx(pd[i]).margin(1e-9));
        }
        for (std::uint64_t i = 0; i < s.padded_size(); ++i) {
            if (ps[i] > 1e-9) {
                REQUIRE(s.read(i) == d.read(i));
                REQUIRE(s.read(i) ==
                        std::vector<std::uint64_t>{spec.data[0].table[i],
                                                   spec.data[1].table[i]});
            }
        }
    }
}

TEST_CASE("lockstep register reports deviations", "[sim][lockstep]") {
    Rng rng(17);
    const auto spec = toy_spec(rng, 6);
    const MarkFn mark = [](std::uint64_t i, std::span<const std::uint64_t>) {
        return i == 4;
    };
    LockstepReport clean;
    auto reg = make_register(spec, Backend::Lockstep, &clean);
    reg->phase_oracle(mark);
    reg->diffusion();
    // the initial state is compared too
    REQUIRE(clean.steps == 3);
    REQUIRE(clean.max_deviation < 1e-9);
    REQUIRE_FALSE(clean.first_mismatch.has_value());

    LockstepReport faulty;
    auto bad = make_register(spec, Backend::Lockstep, &faulty, 1e-3);
    bad->phase_oracle(mark);
    REQUIRE(faulty.first_mismatch.has_value());
    // structured index 0 together with its bound data values
    const auto layout = spec.layout();
    const std::uint64_t basis = layout.at("a").place(spec.data[0].table[0]) |
                                layout.at("b").place(spec.data[1].table[0]);
    REQUIRE(*faulty.first_mismatch == basis);
    REQUIRE(faulty.mismatch_step == 2);
}

TEST_CASE("copy supply enforces its limit", "[sim]") {
    RegisterSpec spec;
    spec.index_width = 1;
    spec.domain_size = 2;
    CopySupply copies(
        [&spec] { return make_register(spec, Backend::Structured); }, 2);
    REQUIRE(copies.take() != nullptr);
    REQUIRE(copies.take() != nullptr);
    REQUIRE(copies.used() == 2);
    REQUIRE(copies.remaining() == 0);
    REQUIRE_THROWS_AS(copies.take(), CopyExhausted);
}

TEST_CASE("dense dump format", "[sim][dense]") {
    DenseState s(index_only(1));
    s.apply_gate(Gate::X, {0});
    std::ostringstream out;
    s.dump(out);
    REQUIRE(out.str().find("1,1,0") != std::string::npos);
}
