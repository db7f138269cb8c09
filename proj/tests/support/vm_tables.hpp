#ifndef SBC_TESTS_VM_TABLES_HPP
#define SBC_TESTS_VM_TABLES_HPP

// Vending-machine reference tables, transcribed cell for cell from the
// reference relation tables (agent display names, channel names as
// printed, parameter cells without types).

#include <array>
#include <string>
#include <string_view>
#include <vector>

#include "sbc/model.hpp"

namespace sbc::testing::vm {

struct ItgrCell {
  std::string_view region, source, caller, channel, params, callee, target;
};

inline constexpr std::array<ItgrCell, 21> kItgr{{
    {"R1", "s11", "Customer", "acceptCoin", "in coin", ":Coin Receptacle", "s12"},
    {"R1", "s12", ":Coin Receptacle", "depositCoin", "in coin", ":Coin Store", "s13"},
    {"R1", "s13", ":Coin Receptacle", "accumulate Payment", "in coinValue", ":Product Vending Controller", "s14"},
    {"R1", "s14", ":Product Selection Buttons", "refresh Selectable Buttons", "out amount", ":Product Vending Controller", "s11"},
    {"R2", "s21", "Customer", "return Payment Request", "", ":Return Payment Button", "s22"},
    {"R2", "s22", ":Return Payment Button", "return Payment", "", ":Product Vending Controller", "s23"},
    {"R2", "s23", ":Product Vending Controller", "returnCoin", "in returnAmount", ":Coin Store", "s24"},
    {"R2", "s24", ":Coin Dispenser", "dispense Coin", "out coins", ":Coin Store", "s25"},
    {"R2", "s25", "Customer", "deliverCoin", "out coins", ":Coin Dispenser", "s26"},
    {"R2", "s26", ":Product Selection Buttons", "refresh Selectable Buttons", "out amount", ":Product Vending Controller", "s21"},
    {"R3", "s31", "Customer", "selection Request", "", ":Product Selection Buttons", "s32"},
    {"R3", "s32", ":Product Selection Buttons", "product Select", "in productNumber; in productValue", ":Product Vending Controller", "s33"},
    {"R3", "s33", ":Product Vending Controller", "pickProduct", "in productNumber", ":Product Store", "s34"},
    {"R3", "s34", ":Product Dispenser", "dispense Product", "out product", ":Product Store", "s35"},
    {"R3", "s35", "Customer", "deliver Product", "out product", ":Product Dispenser", "s36"},
    {"R3", "s36", ":Product Vending Controller", "returnCoin", "in returnAmount", ":Coin Store", "s37"},
    {"R3", "s37", ":Coin Dispenser", "dispense Coin", "out coins", ":Coin Store", "s38"},
    {"R3", "s38", "Customer", "deliverCoin", "out coins", ":Coin Dispenser", "s39"},
    {"R3", "s39", ":Product Selection Buttons", "refresh Selectable Buttons", "out amount", ":Product Vending Controller", "s31"},
    {"R4", "s41", "Vendor", "refill Vending Product", "in products", ":Product Store", "s41"},
    {"R5", "s51", "Vendor", "refill Change Coin", "in coins", ":Coin Store", "s51"},
}};

struct IbdCell {
  std::string_view caller, channel, params, callee;
};

inline constexpr std::array<IbdCell, 16> kIbdr{{
    {"Customer", "acceptCoin", "in coin", ":Coin Receptacle"},
    {":Coin Receptacle", "depositCoin", "in coin", ":Coin Store"},
    {":Coin Receptacle", "accumulate Payment", "in coinValue", ":Product Vending Controller"},
    {":Product Selection Buttons", "refresh Selectable Buttons", "out amount", ":Product Vending Controller"},
    {"Customer", "return Payment Request", "", ":Return Payment Button"},
    {":Return Payment Button", "return Payment", "", ":Product Vending Controller"},
    {":Product Vending Controller", "returnCoin", "in returnAmount", ":Coin Store"},
    {":Coin Dispenser", "dispense Coin", "out coins", ":Coin Store"},
    {"Customer", "deliverCoin", "out coins", ":Coin Dispenser"},
    {"Customer", "selection Request", "", ":Product Selection Buttons"},
    {":Product Selection Buttons", "product Select", "in productNumber; in productValue", ":Product Vending Controller"},
    {":Product Vending Controller", "pickProduct", "in productNumber", ":Product Store"},
    {":Product Dispenser", "dispense Product", "out product", ":Product Store"},
    {"Customer", "deliver Product", "out product", ":Product Dispenser"},
    {"Vendor", "refill Vending Product", "in products", ":Product Store"},
    {"Vendor", "refill Change Coin", "in coins", ":Coin Store"},
}};

struct SmdCell {
  std::string_view region, source, channel, target;
};

inline constexpr std::array<SmdCell, 21> kSmdr{{
    {"R1", "s11", "acceptCoin", "s12"},
    {"R1", "s12", "depositCoin", "s13"},
    {"R1", "s13", "accumulatePayment", "s14"},
    {"R1", "s14", "refreshSelectableButtons", "s11"},
    {"R2", "s21", "returnPaymentRequest", "s22"},
    {"R2", "s22", "returnPayment", "s23"},
    {"R2", "s23", "returnCoin", "s24"},
    {"R2", "s24", "dispenseCoin", "s25"},
    {"R2", "s25", "deliverCoin", "s26"},
    {"R2", "s26", "refreshSelectableButtons", "s21"},
    {"R3", "s31", "selectionRequest", "s32"},
    {"R3", "s32", "productSelect", "s33"},
    {"R3", "s33", "pickProduct", "s34"},
    {"R3", "s34", "dispenseProduct", "s35"},
    {"R3", "s35", "deliverProduct", "s36"},
    {"R3", "s36", "returnCoin", "s37"},
    {"R3", "s37", "dispenseCoin", "s38"},
    {"R3", "s38", "deliverCoin", "s39"},
    {"R3", "s39", "refreshSelectableButtons", "s31"},
    {"R4", "s41", "refillVendingProduct", "s41"},
    {"R5", "s51", "refillChangeCoin", "s51"},
}};

struct AdCell {
  std::string_view region, source, channel, params, callee, target;
};

inline constexpr std::array<AdCell, 21> kAdr{{
    {"R1", "s11", "acceptCoin", "in coin", ":Coin Receptacle", "s12"},
    {"R1", "s12", "depositCoin", "in coin", ":Coin Store", "s13"},
    {"R1", "s13", "accumulate Payment", "in coinValue", ":Product Vending Controller", "s14"},
    {"R1", "s14", "refresh Selectable Buttons", "out amount", ":Product Vending Controller", "s11"},
    {"R2", "s21", "return Payment Request", "", ":Return Payment Button", "s22"},
    {"R2", "s22", "return Payment", "", ":Product Vending Controller", "s23"},
    {"R2", "s23", "returnCoin", "in returnAmount", ":Coin Store", "s24"},
    {"R2", "s24", "dispense Coin", "out coins", ":Coin Store", "s25"},
    {"R2", "s25", "deliverCoin", "out coins", ":Coin Dispenser", "s26"},
    {"R2", "s26", "refresh Selectable Buttons", "out amount", ":Product Vending Controller", "s21"},
    {"R3", "s31", "selection Request", "", ":Product Selection Buttons", "s32"},
    {"R3", "s32", "product Select", "in productNumber; in productValue", ":Product Vending Controller", "s33"},
    {"R3", "s33", "pickProduct", "in productNumber", ":Product Store", "s34"},
    {"R3", "s34", "dispense Product", "out product", ":Product Store", "s35"},
    {"R3", "s35", "deliver Product", "out product", ":Product Dispenser", "s36"},
    {"R3", "s36", "returnCoin", "in returnAmount", ":Coin Store", "s37"},
    {"R3", "s37", "dispense Coin", "out coins", ":Coin Store", "s38"},
    {"R3", "s38", "deliverCoin", "out coins", ":Coin Dispenser", "s39"},
    {"R3", "s39", "refresh Selectable Buttons", "out amount", ":Product Vending Controller", "s31"},
    {"R4", "s41", "refill Vending Product", "in products", ":Product Store", "s41"},
    {"R5", "s51", "refill Change Coin", "in coins", ":Coin Store", "s51"},
}};

/// Removes every whitespace character ("accumulate Payment" -> "accumulatePayment").
std::string squeeze(std::string_view s);

/// Drops `: Type` from each `dir name: Type` entry and normalizes spacing,
/// giving the `dir name; dir name` form the tables print.
std::string untyped_params(std::string_view cell);

/// Collapses runs of whitespace and trims.
std::string normalize_ws(std::string_view s);

/// Path of the shipped vending-machine model.
std::string model_path();

/// Parses the shipped model. Throws std::runtime_error if it does not parse.
SystemModel load_model();

}  // namespace sbc::testing::vm

#endif  // SBC_TESTS_VM_TABLES_HPP
