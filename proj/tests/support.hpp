#pragma once

#include "medgraph/error.hpp"

#include <doctest.h>

#include <functional>

inline medgraph::ErrorKind kind_of(const std::function<void()>& f)
{
    try {
        f();
    }
    catch (const medgraph::Error& e) {
        return e.kind();
    }
    FAIL("no error thrown");
    return medgraph::ErrorKind::ParseError;
}
