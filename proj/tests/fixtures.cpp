#include "fixtures.hpp"

#include <stdexcept>

using beacon::CaseId;
using beacon::Coord;
using beacon::Point;

namespace fixtures {

namespace {

Point P(const char* x, const char* y) {
    Coord cx(x), cy(y);
    cx.canonicalize();
    cy.canonicalize();
    return Point(cx, cy);
}

std::vector<Fixture> build() {
    return {
        {"rectangle", {P("0", "0"), P("3", "0"), P("3", "2"), P("0", "2")}, CaseId::BasisTrivial, 0},
        {"l-shape", {P("0", "0"), P("4", "0"), P("4", "2"), P("2", "2"), P("2", "4"), P("0", "4")}, CaseId::BasisTrivial, 0},
        // Depth-2 basis polygons: n = 8, 10, 12.
        {"basis-u-8",
         {P("0", "0"), P("6", "0"), P("6", "5"), P("4", "5"), P("4", "2"), P("2", "2"), P("2", "4"), P("0", "4")},
         std::nullopt,
         1},
        {"basis-z-8",
         {P("0", "0"), P("4", "0"), P("4", "3"), P("6", "3"), P("6", "6"), P("2", "6"), P("2", "2"), P("0", "2")},
         std::nullopt,
         1},
        {"basis-fork-10",
         {P("0", "0"), P("8", "0"), P("8", "3"), P("6", "3"), P("6", "6"), P("9", "6"), P("9", "10"), P("2", "10"),
          P("2", "2"), P("0", "2")},
         CaseId::BasisAllShort,
         2},
        {"basis-fork-12",
         {P("0", "0"), P("8", "0"), P("8", "3"), P("6", "3"), P("6", "6"), P("9", "6"), P("9", "10"), P("1", "10"),
          P("1", "7"), P("2", "7"), P("2", "2"), P("0", "2")},
         CaseId::BasisAllShort,
         2},
{"all-type-i", {P("0", "0"), P("332", "0"), P("332", "166"), P("542", "166"), P("542", "17/20"), P("640", "17/20"), P("640", "286"), P("298", "286"), P("298", "640"), P("0", "640")}, CaseId::AllTypeI, -1},
        {"basis-all-short",
         {P("0", "0"), P("640", "0"), P("640", "144"), P("501", "144"), P("501", "460"), P("25559/40", "460"),
          P("25559/40", "640"), P("460", "640"), P("460", "509"), P("0", "509")},
         CaseId::BasisAllShort,
         2},
        {"basis-left-child",
         {P("0", "0"), P("512", "0"), P("512", "512"), P("380", "512"), P("380", "456"), P("356", "456"),
          P("356", "2045/4"), P("0", "2045/4")},
         CaseId::BasisLeftChild,
         1},
        {"basis-right-child",
         {P("47/32", "0"), P("512", "0"), P("512", "512"), P("0", "512"), P("0", "465"), P("51", "465"),
          P("51", "172"), P("47/32", "172")},
         CaseId::BasisRightChild,
         1},
        {"basis-tall-center",
         {P("8/5", "0"), P("640", "0"), P("640", "640"), P("486", "640"), P("486", "462"), P("0", "462"),
          P("0", "398"), P("103", "398"), P("103", "135"), P("8/5", "135")},
         CaseId::BasisTallCenter,
         1},
        {"lower-left",
         {P("0", "0"), P("171", "0"), P("171", "570"), P("640", "570"), P("640", "625"), P("316", "625"),
          P("316", "640"), P("141", "640"), P("141", "526"), P("0", "526")},
         CaseId::LowerLeft,
         -1},
        {"one-three-type-iii-right",
         {P("1/48", "0"), P("428", "0"), P("428", "73"), P("429", "73"), P("429", "1/48"), P("768", "1/48"),
          P("768", "768"), P("0", "768"), P("0", "312"), P("130", "312"), P("130", "244"), P("1/48", "244")},
         CaseId::OneThreeTypeIIIRight,
         -1},
        {"two-paired-three",
         {P("0", "0"), P("896", "0"), P("896", "128"), P("830", "128"), P("830", "661"), P("50163/56", "661"),
          P("50163/56", "896"), P("550", "896"), P("550", "780"), P("634", "780"), P("634", "688"),
          P("30813/56", "688"), P("30813/56", "648"), P("0", "648")},
         CaseId::TwoPairedThree,
         -1},
        {"two-paired-two",
         {P("5/24", "0"), P("304", "0"), P("304", "429"), P("768", "429"), P("768", "768"), P("0", "768"),
          P("0", "716"), P("15", "716"), P("15", "706"), P("91", "706"), P("91", "200"), P("5/24", "200")},
         CaseId::TwoPairedTwo,
         -1},
        {"two-solo-two",
         {P("0", "473"), P("392", "473"), P("392", "238"), P("414", "238"), P("414", "0"), P("768", "0"),
          P("768", "299"), P("558", "299"), P("558", "664"), P("18421/24", "664"), P("18421/24", "768"),
          P("0", "768")},
         CaseId::TwoSoloTwo,
         -1},
        {"two-tall-two-kids",
         {P("0", "491"), P("23", "491"), P("23", "0"), P("46", "0"), P("46", "708"), P("768", "708"), P("768", "754"),
          P("598", "754"), P("598", "759"), P("36859/48", "759"), P("36859/48", "768"), P("0", "768")},
         CaseId::TwoTallTwoKids,
         -1},
        {"type-ii-case1",
         {P("0", "0"), P("640", "0"), P("640", "640"), P("176", "640"), P("176", "361"), P("346", "361"),
          P("346", "280"), P("7121/40", "280"), P("7121/40", "135"), P("0", "135")},
         CaseId::TypeIICase1,
         -1},
        {"type-ii-case2",
         {P("3/10", "0"), P("640", "0"), P("640", "334"), P("72", "334"), P("72", "640"), P("0", "640"),
          P("0", "141"), P("138", "141"), P("138", "129"), P("3/10", "129")},
         CaseId::TypeIICase2,
         -1},
        {"type-ii-case4",
         {P("5/8", "0"), P("768", "0"), P("768", "768"), P("0", "768"), P("0", "442"), P("141", "442"),
          P("141", "333"), P("5/16", "333"), P("5/16", "223"), P("222", "223"), P("222", "208"), P("5/8", "208")},
         CaseId::TypeIICase4,
         -1},
        {"upper-left",
         {P("0", "0"), P("535", "0"), P("535", "272"), P("412", "272"), P("412", "394"), P("21379/40", "394"),
          P("21379/40", "415"), P("640", "415"), P("640", "640"), P("0", "640")},
         CaseId::UpperLeft,
         -1},
        {"two-solo-one",
         {P("0", "0"), P("241", "0"), P("241", "207"), P("539", "207"), P("539", "24"), P("600", "24"),
          P("600", "3/5"), P("640", "3/5"), P("640", "640"), P("0", "640")},
         CaseId::TwoSoloOne,
         -1},
        {"one-three-both-left",
         {P("1", "3"), P("2", "3"), P("2", "1"), P("4", "1"), P("4", "2"), P("3", "2"), P("3", "145/48"),
          P("5", "145/48"), P("5", "49/48"), P("6", "49/48"), P("6", "6"), P("1", "6")},
         CaseId::OneThreeBothLeft,
         -1},
        {"one-three-three-type-i-left",
         {P("1/56", "2"), P("6", "2"), P("6", "5"), P("5", "5"), P("5", "4"), P("3", "4"), P("3", "281/56"),
          P("4", "281/56"), P("4", "6"), P("0", "6"), P("0", "225/56"), P("1", "225/56"), P("1", "3"), P("1/56", "3")},
         CaseId::OneThreeThreeTypeILeft,
         -1},
        {"one-three-three-type-i-right",
         {P("113/56", "0"), P("6", "0"), P("6", "1"), P("5", "1"), P("5", "2"), P("335/56", "2"), P("335/56", "5"),
          P("2", "5"), P("2", "3"), P("4", "3"), P("4", "55/56"), P("3", "55/56"), P("3", "111/56"),
          P("113/56", "111/56")},
         CaseId::OneThreeThreeTypeIRight,
         -1},
        {"one-three-type-i-right",
         {P("49/48", "0"), P("6", "0"), P("6", "4"), P("4", "4"), P("4", "5"), P("1", "5"), P("1", "193/48"),
          P("3", "193/48"), P("3", "1"), P("2", "1"), P("2", "3"), P("49/48", "3")},
         CaseId::OneThreeTypeIRight,
         -1},
        {"type-iv",
         {P("1", "7"), P("3", "7"), P("3", "5"), P("4", "5"), P("4", "3"), P("167/56", "3"), P("167/56", "4"),
          P("2", "4"), P("2", "2"), P("6", "2"), P("6", "0"), P("8", "0"), P("8", "8"), P("1", "8")},
         CaseId::TypeIV,
         -1},
        {"two-type-i-one-type-iii",
         {P("265/88", "0"), P("7", "0"), P("7", "2"), P("6", "2"), P("6", "1"), P("5", "1"), P("5", "4"),
          P("529/88", "4"), P("529/88", "3"), P("615/88", "3"), P("615/88", "6"), P("8", "6"), P("8", "7"),
          P("265/44", "7"), P("265/44", "527/88"), P("4", "527/88"), P("4", "5"), P("3", "5"), P("3", "265/88"),
          P("353/88", "265/88"), P("353/88", "175/88"), P("265/88", "175/88")},
         CaseId::TwoTypeIOneTypeIII,
         -1},
        {"type-ii-case3",
         {P("1", "2"), P("2", "2"), P("2", "1"), P("4", "1"), P("4", "225/112"), P("7", "225/112"), P("7", "5"),
          P("8", "5"), P("8", "7"), P("6", "7"), P("6", "8"), P("783/112", "8"), P("783/112", "9"),
          P("671/112", "9"), P("671/112", "10"), P("449/112", "10"), P("449/112", "1009/112"), P("5", "1009/112"),
          P("5", "895/112"), P("225/112", "895/112"), P("225/112", "6"), P("3", "6"), P("3", "785/112"),
          P("225/56", "785/112"), P("225/56", "559/112"), P("113/56", "559/112"), P("113/56", "3"), P("1", "3")},
         CaseId::TypeIICase3,
         -1},
    };
}

}  // namespace

const std::vector<Fixture>& hand_fixtures() {
    static const std::vector<Fixture> all = build();
    return all;
}

const Fixture& fixture(const std::string& name) {
    for (const Fixture& f : hand_fixtures())
        if (f.name == name) return f;
    throw std::out_of_range("no fixture " + name);
}

}  // namespace fixtures
