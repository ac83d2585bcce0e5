#pragma once

// Hand-audited WoS-convention addresses with their expected institution and
// country extractions. The pairs follow real export layout: institution
// before the first comma, country in the final segment, US entries with a
// trailing "ST 12345 USA" block, UK home nations named individually.

#include <string>
#include <vector>

namespace testgen {

struct AuditedAddress {
  std::string address;
  std::string institution;
  std::string country;
};

inline const std::vector<AuditedAddress>& audited_addresses() {
  static const std::vector<AuditedAddress> fixtures = {
      {"UNIST, Sch Technol Management, Ulsan, South Korea", "UNIST",
       "South Korea"},
      {"Univ Oxford, Oxford OX1 2JD, England", "Univ Oxford", "England"},
      {"MIT, Cambridge, MA 02139 USA", "MIT", "USA"},
      {"Univ Amsterdam, Amsterdam Sch Commun Res, NL-1001 NG Amsterdam, Netherlands",
       "Univ Amsterdam", "Netherlands"},
      {"Harvard Univ, Sch Publ Hlth, Boston, MA 02115 USA", "Harvard Univ",
       "USA"},
      {"Univ Edinburgh, Edinburgh EH8 9YL, Midlothian, Scotland",
       "Univ Edinburgh", "Scotland"},
      {"Cardiff Univ, Cardiff Business Sch, Cardiff CF10 3EU, S Glam, Wales",
       "Cardiff Univ", "Wales"},
      {"Queens Univ Belfast, Belfast BT7 1NN, Antrim, North Ireland",
       "Queens Univ Belfast", "North Ireland"},
      {"Tsinghua Univ, Sch Econ & Management, Beijing 100084, Peoples R China",
       "Tsinghua Univ", "Peoples R China"},
      {"Univ Toronto, Rotman Sch Management, Toronto, ON M5S 3E6, Canada",
       "Univ Toronto", "Canada"},
      {"Max Planck Gesell, Hofgartenstr 8, D-80539 Munich, Germany",
       "Max Planck Gesell", "Germany"},
      {"CNRS, GATE, F-69130 Ecully, France", "CNRS", "France"},
      {"Univ Tokyo, Grad Sch Econ, Bunkyo Ku, Tokyo 1130033, Japan",
       "Univ Tokyo", "Japan"},
      {"Korea Univ Technol & Educ, Cheonan 330708, South Korea",
       "Korea Univ Technol & Educ", "South Korea"},
      {"Penn State Univ, Smeal Coll Business, University Pk, PA 16802 USA",
       "Penn State Univ", "USA"},
      {"Georgia State Univ, Robinson Coll Business, Atlanta, GA 30303 USA",
       "Georgia State Univ", "USA"},
      {"City Univ London, Cass Business Sch, London EC1Y 8TZ, England",
       "City Univ London", "England"},
      {"Univ New S Wales, Sch Informat Syst, Sydney, NSW 2052, Australia",
       "Univ New S Wales", "Australia"},
      {"Copenhagen Business Sch, Dept Digitalizat, DK-2000 Frederiksberg, Denmark",
       "Copenhagen Business Sch", "Denmark"},
      {"Natl Univ Singapore, Sch Comp, Singapore 117417, Singapore",
       "Natl Univ Singapore", "Singapore"},
      {"Indian Inst Technol, Vinod Gupta Sch Management, Kharagpur 721302, W Bengal, India",
       "Indian Inst Technol", "India"},
      {"Univ Calif Berkeley, Haas Sch Business, Berkeley, CA 94720 USA",
       "Univ Calif Berkeley", "USA"},
  };
  return fixtures;
}

}  // namespace testgen
