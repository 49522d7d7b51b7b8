// Generated by tools/gen_cm_table.cpp; do not edit by hand.
#include "twistlab/cm.hpp"

namespace twistlab::cm {

const std::vector<RawHilbertEntry>& raw_hilbert_table() {
  static const std::vector<RawHilbertEntry> table{
      {-3, {"0", "1"}},
      {-4, {"-1728", "1"}},
      {-7, {"3375", "1"}},
      {-8, {"-8000", "1"}},
      {-11, {"32768", "1"}},
      {-12, {"-54000", "1"}},
      {-16, {"-287496", "1"}},
      {-19, {"884736", "1"}},
      {-27, {"12288000", "1"}},
      {-28, {"-16581375", "1"}},
      {-43, {"884736000", "1"}},
      {-67, {"147197952000", "1"}},
      {-163, {"262537412640768000", "1"}},
      {-15, {"-121287375", "191025", "1"}},
      {-20, {"-681472000", "-1264000", "1"}},
      {-24, {"14670139392", "-4834944", "1"}},
      {-32, {"12167000000", "-52250000", "1"}},
      {-35, {"-134217728000", "117964800", "1"}},
      {-36, {"-1790957481984", "-153542016", "1"}},
      {-40, {"9103145472000", "-425692800", "1"}},
      {-48, {"6549518250000", "-2835810000", "1"}},
      {-51, {"6262062317568", "5541101568", "1"}},
      {-52, {"-567663552000000", "-6896880000", "1"}},
      {-60, {"153173312762625", "-37018076625", "1"}},
      {-64, {"-7367066619912", "-82226316240", "1"}},
      {-72, {"232381513792000000", "-377674768000", "1"}},
      {-75, {"5209253090426880", "654403829760", "1"}},
      {-88, {"15798135578688000000", "-6294842640000", "1"}},
      {-91, {"-3845689020776448", "10359073013760", "1"}},
      {-99, {"-56171326053810176", "37616060956672", "1"}},
      {-100, {"-292143758886942437376", "-44031499226496", "1"}},
      {-112, {"1337635747140890625", "-274917323970000", "1"}},
      {-115, {"130231327260672000", "427864611225600", "1"}},
      {-123, {"148809594175488000000", "1354146840576000", "1"}},
      {-147, {"11356800389480448000000", "34848505552896000", "1"}},
      {-148, {"-7898242515936467904000000", "-39660183801072000", "1"}},
      {-187, {"-3845689020776448000000", "4545336381788160000", "1"}},
      {-232, {"14871070713157137145512000000000", "-604729957849891344000", "1"}},
      {-235, {"11946621170462723407872000", "823177419449425920000", "1"}},
      {-267, {"531429662672621376897024000000", "19683091854079488000000", "1"}},
      {-403, {"-108844203402491055833088000000", "2452811389229331391979520000", "1"}},
      {-427, {"155041756222618916546936832000000", "15611455512523783919812608000", "1"}},
  };
  return table;
}

}  // namespace twistlab::cm
