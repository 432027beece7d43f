#pragma once

#include <string_view>

// Embedded copies of the files under data/. Regenerate both together.

namespace underdog::bundled
{

inline constexpr std::string_view factors_normalized_csv = R"csv(sport,BL,BV,FS/BS,GS/BS,BG,BB,PP,PBH,PBD,PI,NP/FS,GS/NPG,SI,NRAM/NRPM
Basketball,0,0,0.0013,0,0.5,1,0.270,0.057,0.802,0.25,0.30,0,0,0.17
Cricket,0.97,0.80,1,0.066,0.5,0.4,0,0,0.52,0.55,0,0.073,0.83,0.53
Field Hockey,0.97,0.61,0.29,0.79,0.5,0.3,0.012,0,0.92,0.89,0.041,0.42,0.98,0.17
Futsal,0.40,0.41,0.0052,0.062,0.5,0.7,0.193,1,0.85,0.69,0.15,0.32,0.95,0.53
Handball,0.33,0.41,0.0061,0.074,0.5,0.7,0.431,0.057,0.94,0.60,0.22,0.024,0.82,0
Ice Hockey,0.96,1,0.11,0.23,0,0,0.486,0,0.79,0.91,0.079,0.10,0.99,0.42
Lacrosse,1,0.74,0.46,0.43,0.5,0.9,0.012,0,0.94,0.92,0.031,0.17,0.92,0
Roller Hockey,0.98,0.59,0.056,0.164,0.5,0.1,0.259,0,0.82,0.92,0.12,0.077,0.93,1
Rugby,0.37,0.089,0.042,0.126,1,0.2,1,0.32,0,1,0.029,0.039,0.93,0.67
Soccer,0.38,0.67,0.070,0.188,0.5,0.8,0.009,1,0.91,0.083,0.0096,1,1,0.17
Volleyball,0.73,0.74,0,1,0.5,0.6,0.020,0.19,0.65,0,1,0.75,0.59,0
Water Polo,0.39,0.35,0.0013,0.0095,0.5,0.5,0.463,0.057,0.94,0.5,0.30,0.13,0.77,0.3
)csv";

inline constexpr std::string_view factors_raw_csv = R"csv(sport,BW,BV,FS/BS,GS/BS,BG,BB,PP,PBH,PBP,PE,NP/FS,GS/NPG,SF,NRAM/NRPM
Basketball,602,29,2400,119.1,1,10,24.78,0.092,4.8,33,0.023,0.45,2.4,1.29
Cricket,159.5,128,1000000,NA,1,4,23.15,0.054,19.09,29.39,0.0014,NA,NA,1.6
Field Hockey,160,104,300000,460.6,1,3,23.22,0.054,2.73,25.37,0.0044,7.83,0.073,1.29
Futsal,420,80,6300,47.6,1,7,24.31,0.72,4,27.76,0.012,6,0.15,1.6
Handball,450,79.2,7200,54.1,1,7,25.74,0.092,2.29,28.8,0.018,0.86,0.46,1.14
Ice Hockey,163,152.5,110000,144,0,0,26.08,0.054,5,25.1,0.0071,2.16,0.12,1.5
Lacrosse,145,121,460000,257.6,1,9,23.22,0.054,2.4,25,0.0036,3.35,0.21,1.14
Roller Hockey,155,102,57000,105,1,1,24.71,0.054,4.5,25,0.01,1.79,0.2,2
Rugby,435,40,43000,84,2,2,29.17,0.27,1.27,24,0.0035,1.12,0.2,1.71
Soccer,430,112,71000,119.1,1,8,23.20,0.72,2.91,35,0.0021,17.86,0.03,1.29
Volleyball,270,121,1200,578.6,1,6,23.27,0.18,7.5,36,0.074,13.5,1,1.14
Water Polo,425,72,2500,17.8,1,5,25.93,0.092,2.29,30,0.023,2.7,0.56,1.4
)csv";

inline constexpr std::string_view companion_factors_csv = R"csv(sport,BW,PBP,PE,SF
Basketball,602,4.8,33,2.4
Cricket,159.5,19.09,29.39,NA
Field Hockey,160,2.73,25.37,0.073
Futsal,420,4,27.76,0.15
Handball,450,2.29,28.8,0.46
Ice Hockey,163,5,25.1,0.12
Lacrosse,145,2.4,25,0.21
Roller Hockey,155,4.5,25,0.2
Rugby,435,1.27,24,0.2
Soccer,430,2.91,35,0.03
Volleyball,270,7.5,36,1
Water Polo,425,2.29,30,0.56
)csv";

inline constexpr std::string_view uas_table_csv = R"csv(sport,tau,uas_lambda_1,uas_lambda_0.5,uas_lambda_0
Basketball,4,0.25,0.19,0.16
Cricket,4,0.15,0.11,0.08
Field Hockey,4,0.31,0.22,0.20
Futsal,5,0.17,0.13,0.07
Handball,4,0.21,0.17,0.11
Ice Hockey,3,0.30,0.21,0.18
Lacrosse,4,0.08,0.07,0.06
Roller Hockey,5,0.05,0.02,0.01
Rugby,5,0.07,0.04,0.03
Soccer,7,0.36,0.27,0.22
Volleyball,4,0.22,0.11,0.07
Water Polo,2.5,0.37,0.34,0.32
)csv";

inline constexpr std::string_view editions_csv = R"csv(sport,competition,edition_year
Basketball,Summer Olympic Games,1964
Basketball,Summer Olympic Games,1968
Basketball,Summer Olympic Games,1972
Basketball,Summer Olympic Games,1976
Basketball,Summer Olympic Games,1980
Basketball,Summer Olympic Games,1984
Basketball,Summer Olympic Games,2000
Basketball,Summer Olympic Games,2004
Basketball,Summer Olympic Games,2008
Basketball,Summer Olympic Games,2012
Basketball,Summer Olympic Games,2016
Basketball,Summer Olympic Games,2020
Cricket,ICC Men's Cricket World Cup,1975
Cricket,ICC Men's Cricket World Cup,1979
Cricket,ICC Men's Cricket World Cup,1983
Cricket,ICC Men's Cricket World Cup,1987
Cricket,ICC Men's Cricket World Cup,1992
Cricket,ICC Men's Cricket World Cup,1996
Cricket,ICC Men's Cricket World Cup,1999
Cricket,ICC Men's Cricket World Cup,2003
Cricket,ICC Men's Cricket World Cup,2007
Cricket,ICC Men's Cricket World Cup,2011
Cricket,ICC Men's Cricket World Cup,2015
Cricket,ICC Men's Cricket World Cup,2019
Field Hockey,Men's FIH Hockey World Cup,1971
Field Hockey,Men's FIH Hockey World Cup,1973
Field Hockey,Men's FIH Hockey World Cup,1975
Field Hockey,Men's FIH Hockey World Cup,1978
Field Hockey,Men's FIH Hockey World Cup,1982
Field Hockey,Men's FIH Hockey World Cup,1986
Field Hockey,Men's FIH Hockey World Cup,1994
Field Hockey,Men's FIH Hockey World Cup,1998
Field Hockey,Men's FIH Hockey World Cup,2002
Field Hockey,Men's FIH Hockey World Cup,2006
Field Hockey,Men's FIH Hockey World Cup,2010
Field Hockey,Men's FIH Hockey World Cup,2018
Field Hockey,Men's FIH Hockey World Cup,2023
Futsal,FIFA Futsal World Cup,1989
Futsal,FIFA Futsal World Cup,1992
Futsal,FIFA Futsal World Cup,1996
Futsal,FIFA Futsal World Cup,2000
Futsal,FIFA Futsal World Cup,2004
Futsal,FIFA Futsal World Cup,2008
Futsal,FIFA Futsal World Cup,2012
Futsal,FIFA Futsal World Cup,2016
Futsal,FIFA Futsal World Cup,2020
Handball,Summer Olympic Games,1976
Handball,Summer Olympic Games,1988
Handball,Summer Olympic Games,1992
Handball,Summer Olympic Games,1996
Handball,Summer Olympic Games,2000
Handball,Summer Olympic Games,2008
Handball,Summer Olympic Games,2012
Handball,Summer Olympic Games,2016
Handball,Summer Olympic Games,2020
Ice Hockey,Winter Olympic Games,1924
Ice Hockey,Winter Olympic Games,1928
Ice Hockey,Winter Olympic Games,1932
Ice Hockey,Winter Olympic Games,1948
Ice Hockey,Winter Olympic Games,1952
Ice Hockey,Winter Olympic Games,1956
Ice Hockey,Winter Olympic Games,1960
Ice Hockey,Winter Olympic Games,1964
Ice Hockey,Winter Olympic Games,1972
Ice Hockey,Winter Olympic Games,1976
Ice Hockey,Winter Olympic Games,1980
Ice Hockey,Winter Olympic Games,1984
Ice Hockey,Winter Olympic Games,1988
Ice Hockey,Winter Olympic Games,2002
Ice Hockey,Winter Olympic Games,2006
Ice Hockey,Winter Olympic Games,2010
Ice Hockey,Winter Olympic Games,2014
Ice Hockey,Winter Olympic Games,2018
Ice Hockey,Winter Olympic Games,2022
Lacrosse,World Lacrosse Men's World Cup,1974
Lacrosse,World Lacrosse Men's World Cup,1978
Lacrosse,World Lacrosse Men's World Cup,1982
Lacrosse,World Lacrosse Men's World Cup,1986
Lacrosse,World Lacrosse Men's World Cup,1990
Lacrosse,World Lacrosse Men's World Cup,1994
Lacrosse,World Lacrosse Men's World Cup,1998
Lacrosse,World Lacrosse Men's World Cup,2002
Lacrosse,World Lacrosse Men's World Cup,2006
Lacrosse,World Lacrosse Men's World Cup,2010
Lacrosse,World Lacrosse Men's World Cup,2014
Roller Hockey,World Skate Roller Hockey World Cup,1999
Roller Hockey,World Skate Roller Hockey World Cup,2001
Roller Hockey,World Skate Roller Hockey World Cup,2003
Roller Hockey,World Skate Roller Hockey World Cup,2005
Roller Hockey,World Skate Roller Hockey World Cup,2007
Roller Hockey,World Skate Roller Hockey World Cup,2009
Roller Hockey,World Skate Roller Hockey World Cup,2011
Roller Hockey,World Skate Roller Hockey World Cup,2013
Roller Hockey,World Skate Roller Hockey World Cup,2015
Rugby,Rugby World Cup,1987
Rugby,Rugby World Cup,1991
Rugby,Rugby World Cup,1995
Rugby,Rugby World Cup,1999
Rugby,Rugby World Cup,2003
Rugby,Rugby World Cup,2007
Rugby,Rugby World Cup,2011
Rugby,Rugby World Cup,2015
Rugby,Rugby World Cup,2019
Soccer,FIFA World Cup,1930
Soccer,FIFA World Cup,1934
Soccer,FIFA World Cup,1950
Soccer,FIFA World Cup,1954
Soccer,FIFA World Cup,1958
Soccer,FIFA World Cup,1962
Soccer,FIFA World Cup,1966
Soccer,FIFA World Cup,1970
Soccer,FIFA World Cup,1974
Soccer,FIFA World Cup,1978
Soccer,FIFA World Cup,1982
Soccer,FIFA World Cup,1986
Soccer,FIFA World Cup,1990
Soccer,FIFA World Cup,1994
Soccer,FIFA World Cup,1998
Soccer,FIFA World Cup,2002
Soccer,FIFA World Cup,2006
Soccer,FIFA World Cup,2010
Soccer,FIFA World Cup,2014
Volleyball,FIVB Volleyball Men's World Cup,1965
Volleyball,FIVB Volleyball Men's World Cup,1969
Volleyball,FIVB Volleyball Men's World Cup,1977
Volleyball,FIVB Volleyball Men's World Cup,1981
Volleyball,FIVB Volleyball Men's World Cup,1985
Volleyball,FIVB Volleyball Men's World Cup,1989
Volleyball,FIVB Volleyball Men's World Cup,1991
Volleyball,FIVB Volleyball Men's World Cup,1995
Volleyball,FIVB Volleyball Men's World Cup,1999
Volleyball,FIVB Volleyball Men's World Cup,2003
Volleyball,FIVB Volleyball Men's World Cup,2007
Volleyball,FIVB Volleyball Men's World Cup,2011
Volleyball,FIVB Volleyball Men's World Cup,2015
Volleyball,FIVB Volleyball Men's World Cup,2019
Water Polo,FINA Men's Water Polo World Cup,1979
Water Polo,FINA Men's Water Polo World Cup,1981
Water Polo,FINA Men's Water Polo World Cup,1983
Water Polo,FINA Men's Water Polo World Cup,1985
Water Polo,FINA Men's Water Polo World Cup,1993
Water Polo,FINA Men's Water Polo World Cup,1995
Water Polo,FINA Men's Water Polo World Cup,1999
Water Polo,FINA Men's Water Polo World Cup,2002
Water Polo,FINA Men's Water Polo World Cup,2010
Water Polo,FINA Men's Water Polo World Cup,2014
Water Polo,FINA Men's Water Polo World Cup,2018
)csv";

} // namespace underdog::bundled
