#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "acdgym/rewards.hpp"

using namespace acd;

namespace {

TransitionSummary yt_summary(int compromised, int total, ActionTag action) {
    TransitionSummary s;
    s.end_compromised_count = compromised;
    s.total_nodes = total;
    s.blue_action = action;
    return s;
}

RewardSpec yt_spec(RewardKind kind) { return {kind, RewardEnv::Yt}; }
RewardSpec cage_spec(RewardKind kind) { return {kind, RewardEnv::Cage}; }

CageSummary default_cage() {
    CageSummary c;
    for (int h = 0; h < kCageHostCount; ++h) {
        c.roles[h] = h <= 4   ? HostRole::UserHost
                     : h <= 7 ? HostRole::EnterpriseHost
                     : h == 8 ? HostRole::DefenderHost
                     : h <= 11 ? HostRole::OpHost
                               : HostRole::OpServer;
        c.access[h] = RedAccess::None;
    }
    c.red_confined_to_user_subnet = true;
    return c;
}

}  // namespace

TEST_CASE("YT sparse positive fires only on a clean network") {
    CHECK(reward_yt(yt_spec(RewardKind::Sp), yt_summary(0, 5, ActionTag::ScanNetwork)) == 1.0);
    for (int k = 1; k <= 5; ++k) {
        CHECK(reward_yt(yt_spec(RewardKind::Sp), yt_summary(k, 5, ActionTag::ScanNetwork)) == 0.0);
    }
}

TEST_CASE("YT sparse negative fires only on full compromise") {
    CHECK(reward_yt(yt_spec(RewardKind::Sn), yt_summary(5, 5, ActionTag::ScanNetwork)) == -1.0);
    for (int k = 0; k < 5; ++k) {
        CHECK(reward_yt(yt_spec(RewardKind::Sn), yt_summary(k, 5, ActionTag::ScanNetwork)) == 0.0);
    }
}

TEST_CASE("YT dense negative is linear in the compromised count") {
    for (int k = 0; k <= 8; ++k) {
        CHECK(reward_yt(yt_spec(RewardKind::Dn), yt_summary(k, 8, ActionTag::RestoreNode)) ==
              doctest::Approx(-k));
    }
}

TEST_CASE("YT CDN adds action penalties to the dense term") {
    CHECK(reward_yt(yt_spec(RewardKind::Cdn), yt_summary(2, 5, ActionTag::RestoreNode)) ==
          doctest::Approx(-2.5));
    CHECK(reward_yt(yt_spec(RewardKind::Cdn), yt_summary(0, 5, ActionTag::PlaceDecoy)) ==
          doctest::Approx(-0.25));
    CHECK(reward_yt(yt_spec(RewardKind::Cdn), yt_summary(3, 5, ActionTag::ScanNetwork)) ==
          doctest::Approx(-3.0));
}

TEST_CASE("YT ablated SP is SP shifted by -1") {
    CHECK(reward_yt(yt_spec(RewardKind::AblatedSp), yt_summary(0, 5, ActionTag::ScanNetwork)) ==
          0.0);
    CHECK(reward_yt(yt_spec(RewardKind::AblatedSp), yt_summary(1, 5, ActionTag::ScanNetwork)) ==
          -1.0);

    std::mt19937_64 rng(3);
    for (int iter = 0; iter < 200; ++iter) {
        const int total = 2 + static_cast<int>(rng() % 9);
        const int k = static_cast<int>(rng() % (total + 1));
        const auto s = yt_summary(k, total, ActionTag::RestoreNode);
        CHECK(reward_yt(yt_spec(RewardKind::AblatedSp), s) ==
              doctest::Approx(reward_yt(yt_spec(RewardKind::Sp), s) - 1.0));
    }
}

TEST_CASE("SPN decomposes into SP + SN in both environments") {
    std::mt19937_64 rng(11);
    for (int iter = 0; iter < 200; ++iter) {
        const int total = 2 + static_cast<int>(rng() % 9);
        const int k = static_cast<int>(rng() % (total + 1));
        const auto s = yt_summary(k, total, ActionTag::ScanNetwork);
        CHECK(reward_yt(yt_spec(RewardKind::Spn), s) ==
              doctest::Approx(reward_yt(yt_spec(RewardKind::Sp), s) +
                              reward_yt(yt_spec(RewardKind::Sn), s)));
    }

    for (bool impacted : {false, true}) {
        for (bool confined : {false, true}) {
            TransitionSummary s;
            s.cage = default_cage();
            s.cage.impacted_this_step = impacted;
            s.cage.red_confined_to_user_subnet = confined;
            CHECK(reward_cage(cage_spec(RewardKind::Spn), s) ==
                  doctest::Approx(reward_cage(cage_spec(RewardKind::Sp), s) +
                                  reward_cage(cage_spec(RewardKind::Sn), s)));
        }
    }
}

TEST_CASE("YT SP and SN triggers are mutually exclusive for n >= 2") {
    for (int total = 2; total <= 10; ++total) {
        for (int k = 0; k <= total; ++k) {
            const auto s = yt_summary(k, total, ActionTag::ScanNetwork);
            const bool sp = reward_yt(yt_spec(RewardKind::Sp), s) != 0.0;
            const bool sn = reward_yt(yt_spec(RewardKind::Sn), s) != 0.0;
            CHECK_FALSE((sp && sn));
        }
    }
}

TEST_CASE("CAGE sparse rewards follow the impact and confinement predicates") {
    TransitionSummary s;
    s.cage = default_cage();
    s.cage.impacted_this_step = true;
    s.cage.red_confined_to_user_subnet = false;
    CHECK(reward_cage(cage_spec(RewardKind::Sn), s) == -1.0);
    CHECK(reward_cage(cage_spec(RewardKind::Sp), s) == 0.0);

    s.cage.impacted_this_step = false;
    s.cage.red_confined_to_user_subnet = true;
    CHECK(reward_cage(cage_spec(RewardKind::Sn), s) == 0.0);
    CHECK(reward_cage(cage_spec(RewardKind::Sp), s) == 1.0);
}

TEST_CASE("CAGE CDN spot values") {
    TransitionSummary s;
    s.cage = default_cage();
    s.blue_action = ActionTag::Restore;
    s.cage.access[5] = RedAccess::Privileged;  // enterprise host
    s.cage.red_confined_to_user_subnet = false;
    CHECK(reward_cage(cage_spec(RewardKind::Cdn), s) == doctest::Approx(-2.0));

    TransitionSummary t;
    t.cage = default_cage();
    t.blue_action = ActionTag::Monitor;
    t.cage.access[12] = RedAccess::Privileged;  // operational server
    t.cage.impacted_this_step = true;
    t.cage.red_confined_to_user_subnet = false;
    CHECK(reward_cage(cage_spec(RewardKind::Cdn), t) == doctest::Approx(-11.0));
}

TEST_CASE("CAGE CDN equals an enumerated component table") {
    // Independent oracle: walk every host, apply the per-role privileged
    // penalty, then the impact and restore terms.
    auto oracle = [](const TransitionSummary& s) {
        double total = 0.0;
        for (int h = 0; h < kCageHostCount; ++h) {
            if (s.cage.access[h] != RedAccess::Privileged) continue;
            switch (s.cage.roles[h]) {
                case HostRole::UserHost:
                case HostRole::OpHost: total += -0.1; break;
                default: total += -1.0; break;
            }
        }
        if (s.cage.impacted_this_step) total += -10.0;
        if (s.blue_action == ActionTag::Restore) total += -1.0;
        return total;
    };

    std::mt19937_64 rng(29);
    for (int iter = 0; iter < 300; ++iter) {
        TransitionSummary s;
        s.cage = default_cage();
        for (int h = 0; h < kCageHostCount; ++h) {
            if (h == 8) continue;  // defender host never has red access
            const int r = static_cast<int>(rng() % 3);
            s.cage.access[h] = r == 0   ? RedAccess::None
                               : r == 1 ? RedAccess::UserLevel
                                        : RedAccess::Privileged;
        }
        s.cage.impacted_this_step = (rng() & 1) != 0;
        s.blue_action = (rng() & 1) != 0 ? ActionTag::Restore : ActionTag::Sleep;
        CHECK(reward_cage(cage_spec(RewardKind::Cdn), s) == doctest::Approx(oracle(s)));
    }
}

TEST_CASE("unsupported kind and environment combinations are rejected") {
    TransitionSummary s = yt_summary(0, 5, ActionTag::ScanNetwork);
    s.cage = default_cage();
    CHECK_THROWS_AS(reward_cage(cage_spec(RewardKind::Dn), s), ConfigError);
    CHECK_THROWS_AS(reward_cage(cage_spec(RewardKind::AblatedSp), s), ConfigError);
    CHECK_THROWS_AS(reward_yt(cage_spec(RewardKind::Sp), s), ConfigError);
    CHECK_THROWS_AS(reward_cage(yt_spec(RewardKind::Sp), s), ConfigError);
    CHECK_THROWS_AS(validate(RewardSpec{RewardKind::Dn, RewardEnv::Cage}), ConfigError);
    CHECK_NOTHROW(validate(RewardSpec{RewardKind::Dn, RewardEnv::Yt}));
}

TEST_CASE("reward kind names round-trip") {
    for (RewardKind kind : {RewardKind::Sp, RewardKind::Sn, RewardKind::Spn, RewardKind::Dn,
                            RewardKind::Cdn, RewardKind::AblatedSp}) {
        CHECK(reward_kind_from_string(to_string(kind)) == kind);
    }
    CHECK_THROWS_AS(reward_kind_from_string("BOGUS"), ConfigError);
}
