#pragma once

#include <chrono>
#include <string>
#include <utility>
#include <vector>

#include "weylsym/rational.hpp"

namespace weylsym {

enum class Status { Pass, PassSignFlip, Fail, Skipped };

inline const char* status_name(Status s) {
    switch (s) {
        case Status::Pass: return "pass";
        case Status::PassSignFlip: return "pass_sign_flip";
        case Status::Fail: return "fail";
        case Status::Skipped: return "skipped";
    }
    return "?";
}

struct ItemResult {
    std::string item_id;
    Status status = Status::Pass;
    std::string lhs, rhs, witness;
    double wall_ms = 0.0;
};

namespace detail {
inline std::string str_of(const Rational& r) { return r.get_str(); }
inline std::string str_of(const Integer& n) { return n.get_str(); }
inline std::string str_of(int n) { return std::to_string(n); }
inline std::string str_of(std::size_t n) { return std::to_string(n); }
template <class T>
auto str_of(const T& t) -> decltype(t.to_string()) {
    return t.to_string();
}
}  // namespace detail

template <class T>
ItemResult check_equal(std::string id, const T& lhs, const T& rhs,
                       std::string witness = "") {
    ItemResult r;
    r.item_id = std::move(id);
    r.lhs = detail::str_of(lhs);
    r.rhs = detail::str_of(rhs);
    r.status = (lhs == rhs) ? Status::Pass : Status::Fail;
    r.witness = std::move(witness);
    return r;
}

// Pass when lhs == rhs; PassSignFlip when lhs == -rhs (the recorded
// orientation); Fail otherwise.
template <class T>
ItemResult check_equal_upto_sign(std::string id, const T& lhs, const T& rhs,
                                 std::string witness = "") {
    ItemResult r;
    r.item_id = std::move(id);
    r.lhs = detail::str_of(lhs);
    r.rhs = detail::str_of(rhs);
    if (lhs == rhs) {
        r.status = Status::Pass;
    } else if (lhs == -rhs) {
        r.status = Status::PassSignFlip;
        r.witness = "matches with a global sign flip";
    } else {
        r.status = Status::Fail;
    }
    if (!witness.empty())
        r.witness = r.witness.empty() ? witness : r.witness + "; " + witness;
    return r;
}

inline ItemResult check_true(std::string id, bool ok, std::string lhs = "",
                             std::string rhs = "", std::string witness = "") {
    ItemResult r;
    r.item_id = std::move(id);
    r.status = ok ? Status::Pass : Status::Fail;
    r.lhs = std::move(lhs);
    r.rhs = std::move(rhs);
    r.witness = std::move(witness);
    return r;
}

template <class F>
ItemResult timed_item(F&& body) {
    auto t0 = std::chrono::steady_clock::now();
    ItemResult r = body();
    auto t1 = std::chrono::steady_clock::now();
    r.wall_ms = std::chrono::duration<double, std::milli>(t1 - t0).count();
    return r;
}

}  // namespace weylsym
