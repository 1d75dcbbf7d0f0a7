#include "published_tables.hpp"

#include <sstream>

#include "dsplan/errors.hpp"

namespace dsplan::cli {

namespace {

std::vector<PublishedTable> build() {
  std::vector<PublishedTable> t;
  t.push_back({"T1", {}, "Comparison with Lam and Lin et al. plans, Type-I, C_tau = 0",
               {SchemeKind::type1, {2.5, 0.8}, {0.5, 0.0, 30.0, 0.0}, {{2.0, 0.0}, {2.0, 1.0}, {2.0, 2.0}}},
               {
                   {{{"a", 2.5}, {"b", 0.8}}, 24.8419, 4, 0, 1.3125, 3.0475, std::nullopt, {{"Lam", 24.9367, 3, 0.7077, 0.3539}, {"Lin", 24.9893, 4, 0.6808, 0.3404}}},
                   {{{"a", 1.5}, {"b", 0.8}}, 16.5825, 3, 0, 0.7, 4.2862, std::nullopt, {{"Lam", 16.6233, 3, 0.5262, 0.2631}, {"Lin", 16.7533, 3, 0.5262, 0.2631}}},
                   {{{"a", 2.5}, {"b", 1.0}}, 21.7081, 4, 0, 1.1125, 3.595, std::nullopt, {{"Lam", 21.764, 3, 0.5483, 0.2742}, {"Lin", 21.8515, 4, 0.5819, 0.291}}},
                   {{{"a", 2.0}, {"b", 0.8}}, 21.1398, 4, 0, 1.1625, 3.45, std::nullopt, {{"Lam", 21.2153, 3, 0.6051, 0.3026}, {"Lin", 21.2875, 4, 0.6051, 0.3026}}},
                   {{{"a", 3.0}, {"b", 0.8}}, 27.5581, 3, 0, 1.1625, 2.5875, std::nullopt, {{"Lam", 27.6136, 3, 0.817, 0.4085}, {"Lin", 27.6521, 3, 0.817, 0.4085}}},
                   {{{"a", 2.5}, {"b", 0.6}}, 27.7267, 3, 0, 1.2125, 2.4863, std::nullopt, {{"Lam", 27.7834, 3, 0.8537, 0.4268}, {"Lin", 29.8193, 3, 0.8537, 0.4268}}},
                   {{{"a", 3.5}, {"b", 0.8}}, 29.2789, 2, 0, 1.0125, 1.9875, std::nullopt, {{"Lam", 29.2789, 2, 1.0037, 0.5019}, {"Lin", 29.3642, 2, 1.0037, 0.5019}}},
                   {{{"a", 10.0}, {"b", 3.0}}, 29.5166, 2, 0, 0.8, 2.5187, std::nullopt, {{"Lam", 29.5166, 2, 0.7928, 0.3964}, {"Lin", 29.5959, 2, 0.8194, 0.4097}}},
               }});
  t.push_back({"T2-type1", {}, "DSP vs BSP, Type-I censoring, quadratic loss",
               {SchemeKind::type1, {2.5, 0.8}, {0.5, 0.5, 30.0, 0.0}, {{2.0, 0.0}, {2.0, 1.0}, {2.0, 2.0}}},
               {
                   {{{"a", 2.5}, {"b", 0.8}}, 25.2777, 3, 0, 0.725, 2.975, 25.2777, {}},
                   {{{"a", 2.5}, {"b", 1.0}}, 22.0361, 3, 0, 0.5625, 3.725, 22.0361, {}},
                   {{{"a", 3.5}, {"b", 0.8}}, 29.7131, 2, 0, 0.8125, 1.9875, 29.7131, {}},
                   {{{"Cs", 0.5}}, 25.2777, 3, 0, 0.725, 2.975, 25.2777, {}},
                   {{{"Cs", 1.0}}, 26.5396, 2, 0, 0.5875, 2.8625, 26.5396, {}},
                   {{{"Cs", 2.0}}, 27.9542, 1, 0, 0.375, 2.675, 27.9542, {}},
                   {{{"Ctau", 0.5}}, 25.2777, 3, 0, 0.725, 2.975, 25.2777, {}},
                   {{{"Ctau", 1.0}}, 25.6238, 3, 0, 0.6625, 2.975, 25.6238, {}},
                   {{{"Ctau", 2.0}}, 26.1439, 4, 0, 0.3875, 2.975, 26.1439, {}},
                   {{{"Cr", 20.0}}, 19.3293, 2, 0, 0.875, 1.775, 19.3293, {}},
                   {{{"Cr", 30.0}}, 25.2777, 3, 0, 0.725, 2.975, 25.2777, {}},
                   {{{"Cr", 50.0}}, 32.2092, 5, 0, 0.5625, 5.05, 32.2092, {}},
               }});
  t.push_back({"T2-hybrid", {}, "DSP vs BSP, Type-I hybrid censoring, quadratic loss",
               {SchemeKind::hybrid, {2.5, 0.8}, {0.5, 5.0, 30.0, 0.3}, {{2.0, 0.0}, {2.0, 1.0}, {2.0, 2.0}}},
               {
                   {{{"a", 2.5}, {"b", 0.8}}, 26.0338, 6, 3, 0.2, 2.975, 26.0319, {}},
                   {{{"a", 2.5}, {"b", 1.0}}, 22.6437, 5, 3, 0.1875, 3.72, 22.643, {}},
                   {{{"a", 3.0}, {"b", 0.8}}, 28.7889, 4, 2, 0.2375, 2.3445, 28.7885, {}},
                   {{{"Cs", 0.3}}, 24.3341, 10, 4, 0.15, 3.05, 24.3326, {}, 10},
                   {{{"Cs", 0.5}}, 26.0338, 6, 3, 0.2, 2.975, 26.0319, {}},
                   {{{"Cs", 0.7}}, 26.9114, 3, 2, 0.275, 2.8625, 26.9106, {}},
                   {{{"Ctau", 0.0}}, 24.6754, 4, 4, 0.875, 3.05, 24.6354, {}},
                   {{{"Ctau", 8.0}}, 26.4672, 7, 3, 0.1625, 2.975, 26.4662, {}},
                   {{{"Ctau", 16.0}}, 27.2513, 7, 2, 0.1, 1.9625, 27.2513, {}},
                   {{{"Cr", 25.0}}, 23.3581, 4, 2, 0.2375, 2.2875, 23.3583, {}},
                   {{{"Cr", 30.0}}, 26.0338, 6, 3, 0.2, 2.975, 26.0319, {}},
                   {{{"Cr", 40.0}}, 30.0069, 7, 4, 0.175, 4.075, 30.0072, {}},
               }});
  t.push_back({"hybrid-quintic-ab", {"T3"}, "Hybrid, fifth-degree loss, a and b varied",
               {SchemeKind::hybrid, {1.5, 0.8}, {0.5, 0.5, 30.0, 0.3}, {{2.0, 0.0}, {2.0, 1.0}, {2.0, 2.0}, {2.0, 3.0}, {2.0, 4.0}, {2.0, 5.0}}},
               {
                   {{{"a", 0.2}, {"b", 0.2}}, 12.1795, 5, 4, 1.2625, 0.975, std::nullopt, {}},
                   {{{"a", 1.5}, {"b", 0.4}}, 29.6469, 2, 2, 2.9125, 0.625, std::nullopt, {}},
                   {{{"a", 1.5}, {"b", 0.8}}, 26.2983, 5, 4, 1.6375, 0.925, std::nullopt, {}},
                   {{{"a", 2.5}, {"b", 1.5}}, 27.8324, 5, 4, 1.675, 0.925, std::nullopt, {}},
                   {{{"a", 3.0}, {"b", 1.5}}, 29.9061, 4, 3, 1.7, 0.75, std::nullopt, {}},
               }});
  t.push_back({"hybrid-quintic-a0a1", {}, "Hybrid, fifth-degree loss, a0 or a1 varied",
               {SchemeKind::hybrid, {1.5, 0.8}, {0.5, 0.5, 30.0, 0.3}, {{2.0, 0.0}, {2.0, 1.0}, {2.0, 2.0}, {2.0, 3.0}, {2.0, 4.0}, {2.0, 5.0}}},
               {
                   {{{"a0", 0.5}}, 25.8251, 6, 5, 1.6625, 1.0, std::nullopt, {}},
                   {{{"a0", 1.0}}, 25.9891, 5, 4, 1.625, 0.9375, std::nullopt, {}},
                   {{{"a0", 1.5}}, 26.1444, 5, 4, 1.6375, 0.9375, std::nullopt, {}},
                   {{{"a0", 2.0}}, 26.2983, 5, 4, 1.6375, 0.925, std::nullopt, {}},
                   {{{"a0", 2.5}}, 26.4515, 5, 4, 1.65, 0.925, std::nullopt, {}},
                   {{{"a1", 0.5}}, 26.0091, 6, 5, 1.6625, 1.0, std::nullopt, {}},
                   {{{"a1", 1.0}}, 26.108, 5, 4, 1.625, 0.9375, std::nullopt, {}},
                   {{{"a1", 1.5}}, 26.2038, 5, 4, 1.6375, 0.9375, std::nullopt, {}},
                   {{{"a1", 2.0}}, 26.2983, 5, 4, 1.6375, 0.925, std::nullopt, {}},
                   {{{"a1", 2.5}}, 26.3919, 5, 4, 1.65, 0.925, std::nullopt, {}},
               }});
  t.push_back({"hybrid-quintic-a2a3", {}, "Hybrid, fifth-degree loss, a2 or a3 varied",
               {SchemeKind::hybrid, {1.5, 0.8}, {0.5, 0.5, 30.0, 0.3}, {{2.0, 0.0}, {2.0, 1.0}, {2.0, 2.0}, {2.0, 3.0}, {2.0, 4.0}, {2.0, 5.0}}},
               {
                   {{{"a2", 0.5}}, 26.0403, 6, 5, 1.6625, 1.0125, std::nullopt, {}},
                   {{{"a2", 1.0}}, 26.1284, 5, 4, 1.625, 0.9375, std::nullopt, {}},
                   {{{"a2", 1.5}}, 26.2141, 5, 4, 1.625, 0.9375, std::nullopt, {}},
                   {{{"a2", 2.0}}, 26.2983, 5, 4, 1.6375, 0.925, std::nullopt, {}},
                   {{{"a2", 2.5}}, 26.381, 5, 4, 1.65, 0.925, std::nullopt, {}},
                   {{{"a3", 0.5}}, 25.9983, 6, 5, 1.625, 1.0125, std::nullopt, {}},
                   {{{"a3", 1.0}}, 26.1027, 5, 4, 1.6125, 0.95, std::nullopt, {}},
                   {{{"a3", 1.5}}, 26.2022, 5, 4, 1.625, 0.9375, std::nullopt, {}},
                   {{{"a3", 2.0}}, 26.2983, 5, 4, 1.6375, 0.925, std::nullopt, {}},
                   {{{"a3", 2.5}}, 26.3911, 5, 4, 1.65, 0.9125, std::nullopt, {}},
               }});
  t.push_back({"hybrid-quintic-a4a5", {}, "Hybrid, fifth-degree loss, a4 or a5 varied",
               {SchemeKind::hybrid, {1.5, 0.8}, {0.5, 0.5, 30.0, 0.3}, {{2.0, 0.0}, {2.0, 1.0}, {2.0, 2.0}, {2.0, 3.0}, {2.0, 4.0}, {2.0, 5.0}}},
               {
                   {{{"a4", 0.5}}, 25.8618, 6, 5, 1.5875, 1.05, std::nullopt, {}},
                   {{{"a4", 1.0}}, 26.0212, 5, 4, 1.575, 0.9625, std::nullopt, {}},
                   {{{"a4", 1.5}}, 26.1656, 5, 4, 1.6125, 0.95, std::nullopt, {}},
                   {{{"a4", 2.0}}, 26.2983, 5, 4, 1.6375, 0.925, std::nullopt, {}},
                   {{{"a4", 2.5}}, 26.4212, 5, 4, 1.675, 0.9125, std::nullopt, {}},
                   {{{"a5", 0.5}}, 25.4497, 5, 4, 1.4125, 1.075, std::nullopt, {}},
                   {{{"a5", 1.0}}, 25.8046, 5, 4, 1.5, 1.0125, std::nullopt, {}},
                   {{{"a5", 1.5}}, 26.0771, 5, 4, 1.575, 0.9625, std::nullopt, {}},
                   {{{"a5", 2.0}}, 26.2983, 5, 4, 1.6375, 0.925, std::nullopt, {}},
                   {{{"a5", 2.5}}, 26.4838, 5, 4, 1.7, 0.9, std::nullopt, {}},
               }});
  t.push_back({"hybrid-quintic-cs-ctau", {}, "Hybrid, fifth-degree loss, Cs or C_tau varied",
               {SchemeKind::hybrid, {1.5, 0.8}, {0.5, 0.5, 30.0, 0.3}, {{2.0, 0.0}, {2.0, 1.0}, {2.0, 2.0}, {2.0, 3.0}, {2.0, 4.0}, {2.0, 5.0}}},
               {
                   {{{"Cs", 0.4}}, 25.6655, 7, 5, 1.2375, 0.9875, std::nullopt, {}},
                   {{{"Cs", 0.5}}, 26.2983, 5, 4, 1.6375, 0.925, std::nullopt, {}},
                   {{{"Cs", 0.8}}, 27.4684, 3, 3, 2.8, 0.8375, std::nullopt, {}},
                   {{{"Cs", 1.0}}, 27.9656, 2, 2, 2.5125, 0.7125, std::nullopt, {}},
                   {{{"Cs", 1.5}}, 28.9099, 1, 1, 2.0375, 0.0125, std::nullopt, {}},
                   {{{"Ctau", 0.2}}, 25.9954, 4, 4, 3.1375, 0.925, std::nullopt, {}},
                   {{{"Ctau", 0.5}}, 26.2983, 5, 4, 1.6375, 0.925, std::nullopt, {}},
                   {{{"Ctau", 0.8}}, 26.5453, 6, 4, 1.1375, 0.925, std::nullopt, {}},
                   {{{"Ctau", 1.2}}, 26.8039, 6, 4, 1.1125, 0.925, std::nullopt, {}},
                   {{{"Ctau", 1.5}}, 26.9779, 7, 4, 0.8625, 0.925, std::nullopt, {}},
               }});
  t.push_back({"hybrid-quintic-cr-rs", {}, "Hybrid, fifth-degree loss, Cr or rs varied",
               {SchemeKind::hybrid, {1.5, 0.8}, {0.5, 0.5, 30.0, 0.3}, {{2.0, 0.0}, {2.0, 1.0}, {2.0, 2.0}, {2.0, 3.0}, {2.0, 4.0}, {2.0, 5.0}}},
               {
                   {{{"Cr", 25.0}}, 22.7787, 4, 3, 1.575, 0.7875, std::nullopt, {}},
                   {{{"Cr", 35.0}}, 29.6324, 6, 5, 1.6375, 1.0375, std::nullopt, {}},
                   {{{"Cr", 50.0}}, 38.8182, 8, 7, 1.5375, 1.25, std::nullopt, {}},
                   {{{"Cr", 65.0}}, 47.1201, 10, 9, 1.45, 1.4125, std::nullopt, {}},
                   {{{"Cr", 85.0}}, 57.2562, 12, 11, 1.375, 1.5625, std::nullopt, {}},
                   {{{"rs", 0.05}}, 26.5544, 4, 4, 3.025, 0.925, std::nullopt, {}},
                   {{{"rs", 0.1}}, 26.5352, 4, 4, 3.0, 0.925, std::nullopt, {}},
                   {{{"rs", 0.2}}, 26.4478, 5, 4, 1.6625, 0.925, std::nullopt, {}},
                   {{{"rs", 0.3}}, 26.2983, 5, 4, 1.6375, 0.925, std::nullopt, {}},
                   {{{"rs", 0.35}}, 26.222, 6, 4, 1.1375, 0.925, std::nullopt, {}},
               }});
  t.push_back({"type1-quintic-ab", {"T8"}, "Type-I, fifth-degree loss, a and b varied",
               {SchemeKind::type1, {1.5, 0.8}, {0.5, 0.5, 30.0, 0.0}, {{2.0, 0.0}, {2.0, 1.0}, {2.0, 2.0}, {2.0, 3.0}, {2.0, 4.0}, {2.0, 5.0}}},
               {
                   {{{"a", 1.5}, {"b", 0.8}}, 27.0038, 5, 0, 1.7, 0.9375, std::nullopt, {}},
                   {{{"a", 1.5}, {"b", 1.2}}, 22.9851, 6, 0, 1.6875, 1.075, std::nullopt, {}},
                   {{{"a", 2.5}, {"b", 2.5}}, 21.1783, 6, 0, 1.6125, 1.225, std::nullopt, {}},
                   {{{"a", 3.0}, {"b", 2.5}}, 24.8622, 6, 0, 1.7, 1.125, std::nullopt, {}},
                   {{{"a", 3.0}, {"b", 3.0}}, 21.4133, 6, 0, 1.575, 1.2625, std::nullopt, {}},
               }});
  t.push_back({"type1-quintic-a0a1", {}, "Type-I, fifth-degree loss, a0 or a1 varied",
               {SchemeKind::type1, {1.5, 0.8}, {0.5, 0.5, 30.0, 0.0}, {{2.0, 0.0}, {2.0, 1.0}, {2.0, 2.0}, {2.0, 3.0}, {2.0, 4.0}, {2.0, 5.0}}},
               {
                   {{{"a0", 0.5}}, 26.521, 5, 0, 1.7125, 0.95, std::nullopt, {}},
                   {{{"a0", 1.0}}, 26.6833, 5, 0, 1.7, 0.9375, std::nullopt, {}},
                   {{{"a0", 1.5}}, 26.8436, 5, 0, 1.7, 0.9375, std::nullopt, {}},
                   {{{"a0", 2.0}}, 27.0038, 5, 0, 1.7, 0.9375, std::nullopt, {}},
                   {{{"a0", 2.5}}, 27.1626, 5, 0, 1.6875, 0.925, std::nullopt, {}},
                   {{{"a1", 0.5}}, 26.7003, 5, 0, 1.7, 0.95, std::nullopt, {}},
                   {{{"a1", 1.0}}, 26.8029, 5, 0, 1.7, 0.95, std::nullopt, {}},
                   {{{"a1", 1.5}}, 26.9035, 5, 0, 1.7, 0.9375, std::nullopt, {}},
                   {{{"a1", 2.0}}, 27.0038, 5, 0, 1.7, 0.9375, std::nullopt, {}},
                   {{{"a1", 2.5}}, 27.1026, 5, 0, 1.7, 0.925, std::nullopt, {}},
               }});
  t.push_back({"type1-quintic-a2a3", {}, "Type-I, fifth-degree loss, a2 or a3 varied",
               {SchemeKind::type1, {1.5, 0.8}, {0.5, 0.5, 30.0, 0.0}, {{2.0, 0.0}, {2.0, 1.0}, {2.0, 2.0}, {2.0, 3.0}, {2.0, 4.0}, {2.0, 5.0}}},
               {
                   {{{"a2", 0.5}}, 26.7282, 5, 0, 1.6875, 0.95, std::nullopt, {}},
                   {{{"a2", 1.0}}, 26.8216, 5, 0, 1.6875, 0.95, std::nullopt, {}},
                   {{{"a2", 1.5}}, 26.9135, 5, 0, 1.6875, 0.9375, std::nullopt, {}},
                   {{{"a2", 2.0}}, 27.0038, 5, 0, 1.7, 0.9375, std::nullopt, {}},
                   {{{"a2", 2.5}}, 27.0919, 5, 0, 1.7, 0.925, std::nullopt, {}},
                   {{{"a3", 0.5}}, 26.6814, 5, 0, 1.675, 0.9625, std::nullopt, {}},
                   {{{"a3", 1.0}}, 26.793, 5, 0, 1.675, 0.95, std::nullopt, {}},
                   {{{"a3", 1.5}}, 26.9006, 5, 0, 1.6875, 0.9375, std::nullopt, {}},
                   {{{"a3", 2.0}}, 27.0038, 5, 0, 1.7, 0.9375, std::nullopt, {}},
                   {{{"a3", 2.5}}, 27.1033, 5, 0, 1.7, 0.925, std::nullopt, {}},
               }});
  t.push_back({"type1-quintic-a4a5", {}, "Type-I, fifth-degree loss, a4 or a5 varied",
               {SchemeKind::type1, {1.5, 0.8}, {0.5, 0.5, 30.0, 0.0}, {{2.0, 0.0}, {2.0, 1.0}, {2.0, 2.0}, {2.0, 3.0}, {2.0, 4.0}, {2.0, 5.0}}},
               {
                   {{{"a4", 0.5}}, 26.5349, 5, 0, 1.6375, 0.9875, std::nullopt, {}},
                   {{{"a4", 1.0}}, 26.7044, 5, 0, 1.6625, 0.975, std::nullopt, {}},
                   {{{"a4", 1.5}}, 26.8598, 5, 0, 1.675, 0.95, std::nullopt, {}},
                   {{{"a4", 2.0}}, 27.0038, 5, 0, 1.7, 0.9375, std::nullopt, {}},
                   {{{"a4", 2.5}}, 27.137, 5, 0, 1.7125, 0.9125, std::nullopt, {}},
                   {{{"a5", 0.5}}, 26.0954, 5, 0, 1.5375, 1.075, std::nullopt, {}},
                   {{{"a5", 1.0}}, 26.4724, 5, 0, 1.6, 1.0125, std::nullopt, {}},
                   {{{"a5", 1.5}}, 26.7653, 5, 0, 1.65, 0.9625, std::nullopt, {}},
                   {{{"a5", 2.0}}, 27.0038, 5, 0, 1.7, 0.9375, std::nullopt, {}},
                   {{{"a5", 2.5}}, 27.2053, 5, 0, 1.7375, 0.9, std::nullopt, {}},
               }});
  t.push_back({"type1-quintic-cs-ctau", {}, "Type-I, fifth-degree loss, Cs or C_tau varied",
               {SchemeKind::type1, {1.5, 0.8}, {0.5, 0.5, 30.0, 0.0}, {{2.0, 0.0}, {2.0, 1.0}, {2.0, 2.0}, {2.0, 3.0}, {2.0, 4.0}, {2.0, 5.0}}},
               {
                   {{{"Cs", 0.2}}, 25.0552, 9, 0, 1.475, 1.075, std::nullopt, {}},
                   {{{"Cs", 0.3}}, 25.855, 7, 0, 1.6375, 1.025, std::nullopt, {}},
                   {{{"Cs", 0.5}}, 27.0038, 5, 0, 1.7, 0.9375, std::nullopt, {}},
                   {{{"Cs", 0.8}}, 28.2251, 3, 0, 2.525, 0.8375, std::nullopt, {}},
                   {{{"Cs", 1.2}}, 29.0845, 2, 0, 2.3, 0.7125, std::nullopt, {}},
                   {{{"Ctau", 0.2}}, 26.396, 5, 0, 2.55, 0.975, std::nullopt, {}},
                   {{{"Ctau", 0.5}}, 27.0038, 5, 0, 1.7, 0.9375, std::nullopt, {}},
                   {{{"Ctau", 0.8}}, 27.4884, 5, 0, 1.55, 0.925, std::nullopt, {}},
                   {{{"Ctau", 1.2}}, 28.0462, 6, 0, 1.125, 0.925, std::nullopt, {}},
                   {{{"Ctau", 1.5}}, 28.3763, 6, 0, 1.075, 0.925, std::nullopt, {}},
               }});
  t.push_back({"type1-quintic-cr-rs", {}, "Type-I, fifth-degree loss, Cr or rs varied",
               {SchemeKind::type1, {1.5, 0.8}, {0.5, 0.5, 30.0, 0.0}, {{2.0, 0.0}, {2.0, 1.0}, {2.0, 2.0}, {2.0, 3.0}, {2.0, 4.0}, {2.0, 5.0}}},
               {
                   {{{"Cr", 25.0}}, 23.4949, 4, 0, 1.5875, 0.7875, std::nullopt, {}},
                   {{{"Cr", 50.0}}, 39.5495, 7, 0, 1.825, 1.225, std::nullopt, {}},
                   {{{"Cr", 85.0}}, 58.1138, 11, 0, 1.7875, 1.5625, std::nullopt, {}},
                   {{{"Cr", 100.0}}, 65.2465, 12, 0, 1.775, 1.65, std::nullopt, {}},
                   {{{"Cr", 125.0}}, 76.3677, 14, 0, 1.75, 1.7875, std::nullopt, {}},
                   {{{"rs", 0.05}}, 26.9583, 5, 0, 1.675, 0.9375, std::nullopt, {}},
                   {{{"rs", 0.1}}, 26.9121, 5, 0, 1.6625, 0.9375, std::nullopt, {}},
                   {{{"rs", 0.2}}, 26.8185, 5, 0, 1.625, 0.9375, std::nullopt, {}},
                   {{{"rs", 0.3}}, 26.7229, 5, 0, 1.6, 0.925, std::nullopt, {}},
                   {{{"rs", 0.4}}, 26.6071, 6, 0, 1.2625, 0.9375, std::nullopt, {}},
               }});
  t.push_back({"hybrid-nonpoly-ab", {"T12"}, "Hybrid, a0 + a1 l + a2 l^2.5 loss, a and b varied",
               {SchemeKind::hybrid, {2.5, 0.8}, {0.5, 5.0, 30.0, 0.3}, {{2.0, 0.0}, {2.0, 1.0}, {2.0, 2.5}}},
               {
                   {{{"a", 0.2}, {"b", 0.2}}, 10.5326, 5, 2, 0.175, 2.3125, std::nullopt, {}},
                   {{{"a", 1.5}, {"b", 0.4}}, 27.4453, 6, 3, 0.3125, 1.9375, std::nullopt, {}},
                   {{{"a", 1.5}, {"b", 0.8}}, 20.2414, 8, 4, 0.225, 2.6125, std::nullopt, {}},
                   {{{"a", 2.5}, {"b", 0.8}}, 28.4481, 6, 3, 0.3125, 1.9625, std::nullopt, {}},
                   {{{"a", 3.0}, {"b", 1.5}}, 22.6152, 6, 3, 0.1875, 2.95, std::nullopt, {}},
               }});
  t.push_back({"hybrid-nonpoly-a0a1", {}, "Hybrid, a0 + a1 l + a2 l^2.5 loss, a0 or a1 varied",
               {SchemeKind::hybrid, {2.5, 0.8}, {0.5, 5.0, 30.0, 0.3}, {{2.0, 0.0}, {2.0, 1.0}, {2.0, 2.5}}},
               {
                   {{{"a0", 0.5}}, 27.9446, 6, 3, 0.3, 2.0375, std::nullopt, {}},
                   {{{"a0", 1.0}}, 28.1152, 6, 3, 0.3, 2.0125, std::nullopt, {}},
                   {{{"a0", 1.5}}, 28.284, 6, 3, 0.3125, 1.9875, std::nullopt, {}},
                   {{{"a0", 2.0}}, 28.4481, 6, 3, 0.3125, 1.9625, std::nullopt, {}},
                   {{{"a0", 2.5}}, 28.6111, 6, 3, 0.3125, 1.9375, std::nullopt, {}},
                   {{{"a1", 0.5}}, 27.5833, 6, 3, 0.2875, 2.1375, std::nullopt, {}},
                   {{{"a1", 1.0}}, 27.8877, 6, 3, 0.3, 2.075, std::nullopt, {}},
                   {{{"a1", 1.5}}, 28.1737, 6, 3, 0.3, 2.025, std::nullopt, {}},
                   {{{"a1", 2.0}}, 28.4481, 6, 3, 0.3125, 1.9625, std::nullopt, {}},
                   {{{"a1", 2.5}}, 28.7106, 6, 3, 0.325, 1.9125, std::nullopt, {}},
               }});
  t.push_back({"hybrid-nonpoly-a2-ctau", {}, "Hybrid, a0 + a1 l + a2 l^2.5 loss, a2 or C_tau varied",
               {SchemeKind::hybrid, {2.5, 0.8}, {0.5, 5.0, 30.0, 0.3}, {{2.0, 0.0}, {2.0, 1.0}, {2.0, 2.5}}},
               {
                   {{{"a2", 0.5}}, 21.4982, 5, 3, 0.15, 1.575, std::nullopt, {}},
                   {{{"a2", 1.0}}, 25.4359, 6, 3, 0.2, 2.975, std::nullopt, {}},
                   {{{"a2", 1.5}}, 27.3171, 6, 3, 0.2625, 2.3125, std::nullopt, {}},
                   {{{"a2", 2.0}}, 28.4481, 6, 3, 0.3125, 1.9625, std::nullopt, {}},
                   {{{"a2", 2.5}}, 29.1885, 5, 2, 0.2875, 1.525, std::nullopt, {}},
                   {{{"Ctau", 0.5}}, 27.2156, 4, 4, 1.3, 2.1, std::nullopt, {}},
                   {{{"Ctau", 1.5}}, 27.6168, 4, 3, 0.6, 1.9625, std::nullopt, {}},
                   {{{"Ctau", 3.0}}, 28.0288, 5, 3, 0.4125, 1.9625, std::nullopt, {}},
                   {{{"Ctau", 4.0}}, 28.2477, 6, 3, 0.3125, 1.9625, std::nullopt, {}},
                   {{{"Ctau", 5.0}}, 28.4481, 6, 3, 0.3125, 1.9625, std::nullopt, {}},
               }});
  t.push_back({"hybrid-nonpoly-cs-cr", {}, "Hybrid, a0 + a1 l + a2 l^2.5 loss, Cs or Cr varied",
               {SchemeKind::hybrid, {2.5, 0.8}, {0.5, 5.0, 30.0, 0.3}, {{2.0, 0.0}, {2.0, 1.0}, {2.0, 2.5}}},
               {
                   {{{"Cs", 0.4}}, 27.7042, 10, 4, 0.225, 2.1, std::nullopt, {}},
                   {{{"Cs", 0.5}}, 28.4481, 6, 3, 0.3125, 1.9625, std::nullopt, {}},
                   {{{"Cs", 0.6}}, 28.9501, 4, 2, 0.325, 1.7375, std::nullopt, {}},
                   {{{"Cs", 0.7}}, 29.3501, 4, 2, 0.325, 1.7375, std::nullopt, {}},
                   {{{"Cs", 0.8}}, 29.6455, 2, 1, 0.3625, 0.0125, std::nullopt, {}},
                   {{{"Cr", 25.0}}, 24.8091, 5, 2, 0.2875, 1.5125, std::nullopt, {}},
                   {{{"Cr", 35.0}}, 31.667, 8, 4, 0.275, 2.325, std::nullopt, {}},
                   {{{"Cr", 50.0}}, 39.5133, 10, 6, 0.275, 3.1, std::nullopt, {}},
                   {{{"Cr", 65.0}}, 45.5177, 11, 7, 0.2625, 3.6875, std::nullopt, {}},
                   {{{"Cr", 85.0}}, 51.6634, 12, 8, 0.2375, 4.3625, std::nullopt, {}},
               }});
  t.push_back({"hybrid-nonpoly-rs", {}, "Hybrid, a0 + a1 l + a2 l^2.5 loss, rs varied",
               {SchemeKind::hybrid, {2.5, 0.8}, {0.5, 5.0, 30.0, 0.3}, {{2.0, 0.0}, {2.0, 1.0}, {2.0, 2.5}}},
               {
                   {{{"rs", 0.05}}, 29.1184, 3, 2, 0.475, 1.7375, std::nullopt, {}},
                   {{{"rs", 0.1}}, 29.0215, 4, 2, 0.3375, 1.7375, std::nullopt, {}},
                   {{{"rs", 0.2}}, 28.7866, 4, 2, 0.3375, 1.7375, std::nullopt, {}},
                   {{{"rs", 0.3}}, 28.4481, 6, 3, 0.3125, 1.9625, std::nullopt, {}},
                   {{{"rs", 0.4}}, 27.9798, 8, 3, 0.2125, 1.9625, std::nullopt, {}},
               }});
  t.push_back({"type1-nonpoly-ab", {"T17"}, "Type-I, a0 + a1 l + a2 l^2.5 loss, a and b varied",
               {SchemeKind::type1, {2.5, 0.8}, {0.5, 0.5, 30.0, 0.0}, {{2.0, 0.0}, {2.0, 1.0}, {2.0, 2.5}}},
               {
                   {{{"a", 1.5}, {"b", 0.4}}, 26.6262, 3, 0, 1.1125, 1.9375, std::nullopt, {}},
                   {{{"a", 1.5}, {"b", 0.8}}, 19.4142, 4, 0, 0.9, 2.6125, std::nullopt, {}},
                   {{{"a", 2.5}, {"b", 0.8}}, 27.5603, 4, 0, 1.075, 2.0625, std::nullopt, {}},
                   {{{"a", 2.5}, {"b", 1.2}}, 22.2069, 4, 0, 0.8875, 2.65, std::nullopt, {}},
                   {{{"a", 3.0}, {"b", 1.5}}, 21.8535, 4, 0, 0.825, 2.875, std::nullopt, {}},
               }});
  t.push_back({"type1-nonpoly-a0a1", {}, "Type-I, a0 + a1 l + a2 l^2.5 loss, a0 or a1 varied",
               {SchemeKind::type1, {2.5, 0.8}, {0.5, 0.5, 30.0, 0.0}, {{2.0, 0.0}, {2.0, 1.0}, {2.0, 2.5}}},
               {
                   {{{"a0", 0.5}}, 27.0238, 4, 0, 1.075, 2.1375, std::nullopt, {}},
                   {{{"a0", 1.0}}, 27.205, 4, 0, 1.075, 2.1125, std::nullopt, {}},
                   {{{"a0", 1.5}}, 27.3838, 4, 0, 1.075, 2.0875, std::nullopt, {}},
                   {{{"a0", 2.0}}, 27.5603, 4, 0, 1.075, 2.0625, std::nullopt, {}},
                   {{{"a0", 2.5}}, 27.7262, 3, 0, 1.1125, 1.9375, std::nullopt, {}},
                   {{{"a1", 0.5}}, 26.6463, 4, 0, 1.0375, 2.25, std::nullopt, {}},
                   {{{"a1", 1.0}}, 26.9657, 4, 0, 1.05, 2.175, std::nullopt, {}},
                   {{{"a1", 1.5}}, 27.2702, 4, 0, 1.0625, 2.1125, std::nullopt, {}},
                   {{{"a1", 2.0}}, 27.5603, 4, 0, 1.075, 2.0625, std::nullopt, {}},
                   {{{"a1", 2.5}}, 27.8216, 3, 0, 1.125, 1.9125, std::nullopt, {}},
               }});
  t.push_back({"type1-nonpoly-a2-cs", {}, "Type-I, a0 + a1 l + a2 l^2.5 loss, a2 or Cs varied",
               {SchemeKind::type1, {2.5, 0.8}, {0.5, 0.5, 30.0, 0.0}, {{2.0, 0.0}, {2.0, 1.0}, {2.0, 2.5}}},
               {
                   {{{"a2", 0.5}}, 20.9985, 4, 0, 0.5375, 4.7375, std::nullopt, {}},
                   {{{"a2", 1.0}}, 24.5967, 4, 0, 0.8, 3.05, std::nullopt, {}},
                   {{{"a2", 1.5}}, 26.4246, 4, 0, 0.9625, 2.4125, std::nullopt, {}},
                   {{{"a2", 2.0}}, 27.5603, 4, 0, 1.075, 2.0625, std::nullopt, {}},
                   {{{"a2", 2.5}}, 28.3162, 3, 0, 1.225, 1.7375, std::nullopt, {}},
                   {{{"Cs", 0.2}}, 25.9956, 8, 0, 0.875, 2.3, std::nullopt, {}},
                   {{{"Cs", 0.3}}, 26.6479, 6, 0, 0.925, 2.2, std::nullopt, {}},
                   {{{"Cs", 0.5}}, 27.5603, 4, 0, 1.075, 2.0625, std::nullopt, {}},
                   {{{"Cs", 0.8}}, 28.377, 2, 0, 0.95, 1.7375, std::nullopt, {}},
                   {{{"Cs", 1.2}}, 29.1411, 1, 0, 0.725, 0.6, std::nullopt, {}},
               }});
  t.push_back({"type1-nonpoly-ctau-cr", {}, "Type-I, a0 + a1 l + a2 l^2.5 loss, C_tau or Cr varied",
               {SchemeKind::type1, {2.5, 0.8}, {0.5, 0.5, 30.0, 0.0}, {{2.0, 0.0}, {2.0, 1.0}, {2.0, 2.5}}},
               {
                   {{{"Ctau", 0.2}}, 27.2069, 4, 0, 1.3, 2.0875, std::nullopt, {}},
                   {{{"Ctau", 0.5}}, 27.5603, 4, 0, 1.075, 2.0625, std::nullopt, {}},
                   {{{"Ctau", 0.7}}, 27.7625, 4, 0, 0.95, 2.025, std::nullopt, {}},
                   {{{"Ctau", 1.0}}, 28.024, 4, 0, 0.7875, 1.9875, std::nullopt, {}},
                   {{{"Ctau", 1.5}}, 28.3421, 4, 0, 0.6, 1.9625, std::nullopt, {}},
                   {{{"Cr", 25.0}}, 24.0664, 2, 0, 1.0625, 1.5125, std::nullopt, {}},
                   {{{"Cr", 35.0}}, 30.6915, 4, 0, 1.05, 2.3125, std::nullopt, {}},
                   {{{"Cr", 50.0}}, 38.4988, 6, 0, 0.925, 3.0875, std::nullopt, {}},
                   {{{"Cr", 65.0}}, 44.601, 7, 0, 0.85, 3.6875, std::nullopt, {}},
                   {{{"Cr", 85.0}}, 50.9093, 8, 0, 0.775, 4.3625, std::nullopt, {}},
               }});
  t.push_back({"type1-nonpoly-rs", {}, "Type-I, a0 + a1 l + a2 l^2.5 loss, rs varied",
               {SchemeKind::type1, {2.5, 0.8}, {0.5, 0.5, 30.0, 0.0}, {{2.0, 0.0}, {2.0, 1.0}, {2.0, 2.5}}},
               {
                   {{{"rs", 0.05}}, 27.5361, 4, 0, 1.05, 2.05, std::nullopt, {}},
                   {{{"rs", 0.1}}, 27.5112, 4, 0, 1.0375, 2.05, std::nullopt, {}},
                   {{{"rs", 0.2}}, 27.4589, 4, 0, 0.9875, 2.0375, std::nullopt, {}},
                   {{{"rs", 0.3}}, 27.4025, 4, 0, 0.9125, 2.0125, std::nullopt, {}},
                   {{{"rs", 0.4}}, 27.31, 5, 0, 0.6875, 2.1, std::nullopt, {}},
               }});
  return t;
}

}  // namespace

const std::vector<PublishedTable>& published_tables() {
  static const std::vector<PublishedTable> tables = build();
  return tables;
}

const PublishedTable* find_table(const std::string& id) {
  for (const auto& t : published_tables()) {
    if (t.id == id) return &t;
    for (const auto& a : t.aliases) {
      if (a == id) return &t;
    }
  }
  return nullptr;
}

TableSetting apply_overrides(const TableSetting& base, const std::vector<Override>& overrides) {
  TableSetting s = base;
  for (const auto& o : overrides) {
    if (o.name == "a") {
      s.prior.shape = o.value;
    } else if (o.name == "b") {
      s.prior.rate = o.value;
    } else if (o.name == "Cs") {
      s.costs.c_sample = o.value;
    } else if (o.name == "Ctau") {
      s.costs.c_time = o.value;
    } else if (o.name == "Cr") {
      s.costs.c_reject = o.value;
    } else if (o.name == "rs") {
      s.costs.salvage = o.value;
    } else if (o.name.size() == 2 && o.name[0] == 'a' && o.name[1] >= '0' && o.name[1] <= '9') {
      const std::size_t i = static_cast<std::size_t>(o.name[1] - '0');
      if (i >= s.acceptance.size()) throw ValidationError("override " + o.name + " has no matching term");
      s.acceptance[i].coefficient = o.value;
    } else {
      throw ValidationError("unknown override " + o.name);
    }
  }
  return s;
}

std::string describe(const std::vector<Override>& overrides) {
  std::ostringstream os;
  os.imbue(std::locale::classic());
  for (std::size_t i = 0; i < overrides.size(); ++i) {
    if (i > 0) os << ' ';
    os << overrides[i].name << '=' << overrides[i].value;
  }
  return os.str();
}

}  // namespace dsplan::cli
